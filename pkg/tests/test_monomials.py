"""Tests for the factorwise word algebra."""

import itertools

import numpy as np
import pytest

from conftest import all_factors, brute_factor, brute_monomial, read_off_primitive
from oddsphere.monomials import (
    IDENTITY_FACTOR,
    ZERO,
    DimensionMismatch,
    Monomial,
    adjoint,
    adjoint_factor,
    compose_factor,
    free,
    identity_monomial,
    monomial,
    mul,
    pinched,
)


def test_identity_is_neutral_factor():
    f = free(2, 1)
    assert compose_factor(IDENTITY_FACTOR, f) == f
    assert compose_factor(f, IDENTITY_FACTOR) == f


def test_free_zero_zero_canonicalises_to_identity():
    assert free(0, 0) == IDENTITY_FACTOR
    assert pinched(0, 0) != IDENTITY_FACTOR


def test_shift_kills_vacuum_projection():
    # S . p = 0: the composition that collapses the cross-generator product
    assert compose_factor(free(0, 1), pinched(0, 0)) is None


def test_pinched_composition_derived_from_matrices():
    # Pinched(1,2).Pinched(2,3): read the answer off 8x8 matrix arithmetic.
    dim = 8
    product = brute_factor(pinched(1, 2), dim) @ brute_factor(pinched(2, 3), dim)
    derived = read_off_primitive(product, dim, 4, list(range(dim)))
    assert derived == pinched(1, 3)
    assert compose_factor(pinched(1, 2), pinched(2, 3)) == pinched(1, 3)


def test_factor_composition_matches_matrices_exhaustively():
    # dim 12, exponents <= 2; composite images stay below row 12 for
    # columns < 8, so the comparison there is truncation-free.
    dim, bound = 12, 2
    safe = list(range(8))
    factors = all_factors(bound)
    for f in factors:
        for g in factors:
            want = brute_factor(f, dim) @ brute_factor(g, dim)
            got = compose_factor(f, g)
            gmat = np.zeros((dim, dim)) if got is None else brute_factor(got, dim)
            assert np.array_equal(gmat[:, safe], want[:, safe]), (f, g, got)


def test_factor_composition_is_associative():
    factors = all_factors(2)
    for f, g, h in itertools.product(factors, repeat=3):
        left = compose_factor(f, g)
        lhs = None if left is None else compose_factor(left, h)
        right = compose_factor(g, h)
        rhs = None if right is None else compose_factor(f, right)
        assert lhs == rhs, (f, g, h)


def _small_monomials(ell, factor_bound, z_values):
    factors = all_factors(factor_bound)
    out = [ZERO]
    for legs in itertools.product(factors, repeat=ell):
        for z in z_values:
            out.append(monomial(legs, z))
    return out


def test_zero_absorbs_and_identity_is_neutral():
    y = monomial((free(1, 0), pinched(0, 2)), -3)
    assert mul(ZERO, y) == ZERO
    assert mul(y, ZERO) == ZERO
    assert mul(identity_monomial(2), y) == y
    assert mul(y, identity_monomial(2)) == y


def test_dimension_mismatch_raises():
    with pytest.raises(DimensionMismatch):
        mul(identity_monomial(2), identity_monomial(3))


def test_monomial_associativity_small_exhaustive():
    words = _small_monomials(1, 2, (-1, 0, 1))
    for x, y, z in itertools.product(words[: len(words) // 2], repeat=3):
        assert mul(mul(x, y), z) == mul(x, mul(y, z))


def test_monomial_associativity_two_legs():
    words = _small_monomials(2, 1, (0,))
    for x, y, z in itertools.product(words, repeat=3):
        assert mul(mul(x, y), z) == mul(x, mul(y, z))


def test_adjoint_is_antimultiplicative_and_involutive():
    words = _small_monomials(2, 1, (-1, 1))
    for x in words:
        assert adjoint(adjoint(x)) == x
    for x, y in itertools.product(words, repeat=2):
        assert adjoint(mul(x, y)) == mul(adjoint(y), adjoint(x))


def test_adjoint_trivial_cases():
    assert adjoint(ZERO) == ZERO
    assert adjoint(identity_monomial(3)) == identity_monomial(3)


def test_every_nonzero_word_is_a_partial_isometry():
    for x in _small_monomials(2, 2, (-2, 0, 2)):
        if x.is_zero:
            continue
        assert mul(x, mul(adjoint(x), x)) == x


def test_words_match_matrices_on_interior():
    # mul and adjoint commute with matrix product / transpose away from the
    # truncation edge (columns with small leg indices and central z).
    ell, n_max, z_max = 2, 9, 6
    words = _small_monomials(ell, 1, (-1, 0, 1))[:60]
    leg = n_max + 1
    zdim = 2 * z_max + 1
    safe_leg = range(0, 6)
    safe_z = range(-2, 3)
    cols = [
        (j1 * leg + j2) * zdim + (z + z_max)
        for j1 in safe_leg
        for j2 in safe_leg
        for z in safe_z
    ]
    for x in words:
        bx = brute_monomial(x, ell, n_max, z_max)
        assert np.array_equal(
            brute_monomial(adjoint(x), ell, n_max, z_max)[:, cols], bx.T[:, cols]
        )
    for x, y in itertools.product(words[:25], repeat=2):
        want = brute_monomial(x, ell, n_max, z_max) @ brute_monomial(
            y, ell, n_max, z_max
        )
        got = brute_monomial(mul(x, y), ell, n_max, z_max)
        assert np.array_equal(got[:, cols], want[:, cols]), (x, y)
