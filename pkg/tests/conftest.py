"""Shared brute-force helpers: a dense numpy model of the shift operators,
independent of the package's sparse oracle, used to derive and freeze
expected values."""

import itertools

import numpy as np
import pytest

from oddsphere.monomials import FREE, IDENTITY, PINCHED, PrimitiveFactor, free, pinched


def brute_factor(f: PrimitiveFactor, dim: int) -> np.ndarray:
    out = np.zeros((dim, dim))
    if f.kind == IDENTITY:
        return np.eye(dim)
    if f.kind == PINCHED:
        if f.a < dim and f.b < dim:
            out[f.a, f.b] = 1.0
        return out
    for j in range(f.b, dim):
        if j - f.b + f.a < dim:
            out[j - f.b + f.a, j] = 1.0
    return out


def brute_t_power(k: int, z_max: int) -> np.ndarray:
    dim = 2 * z_max + 1
    out = np.zeros((dim, dim))
    for z in range(-z_max, z_max + 1):
        if -z_max <= z + k <= z_max:
            out[z + k + z_max, z + z_max] = 1.0
    return out


def brute_monomial(x, ell: int, n_max: int, z_max: int) -> np.ndarray:
    dim = (n_max + 1) ** ell * (2 * z_max + 1)
    if x.is_zero:
        return np.zeros((dim, dim))
    mat = np.eye(1)
    for f in x.factors:
        mat = np.kron(mat, brute_factor(f, n_max + 1))
    return np.kron(mat, brute_t_power(x.z_exp, z_max))


def all_factors(bound: int):
    """Every primitive factor with exponents <= bound (identity included)."""
    out = [PrimitiveFactor(IDENTITY, 0, 0)]
    for a in range(bound + 1):
        for b in range(bound + 1):
            out.append(pinched(a, b))
            if (a, b) != (0, 0):
                out.append(free(a, b))
    return out


def read_off_primitive(mat: np.ndarray, dim: int, exp_bound: int, safe_cols):
    """The unique primitive (or zero) whose truncated matrix agrees with
    ``mat`` on the given columns; used to derive expected composition
    values straight from matrix arithmetic."""
    matches = []
    candidates = [None] + all_factors(exp_bound)
    for cand in candidates:
        cmat = np.zeros((dim, dim)) if cand is None else brute_factor(cand, dim)
        if np.array_equal(cmat[:, safe_cols], mat[:, safe_cols]):
            matches.append(cand)
    assert len(matches) == 1, f"expected a unique match, got {matches}"
    return matches[0]


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
