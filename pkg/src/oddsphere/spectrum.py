"""Characters of the projection semilattice and the tight spectrum.

The nonzero projections p_i(m) = B[i; 0; m; m] together with 0 form a
commutative semilattice E in which any two elements are either comparable
or orthogonal.  A character is a nonzero multiplicative map E -> {0, 1}
killing 0; its support is a filter, and maximal filters (ultrafilters) make
up the tight part of the character space.

Extended indices k in (N u {inf})^ell parametrise the tight characters in
closed form:

    value(k)(p_i(m)) = [m_1..m_{i-1} = k_1..k_{i-1}] * [m_i <= k_i]   i <= ell
    value(k)(p_{ell+1}(m)) = [m = k]

with the convention k_{ell+1} = inf.  Two indices give the same character
exactly when they agree up to and including the first infinite entry, so
the canonical representative pads everything after the first inf with inf.

Truncation semantics: a bound B restricts attention to projections with
entries <= B.  Maximality of a filter is certified through annihilating
witnesses -- for a filter A, no strictly larger filter exists iff every
projection outside A is orthogonal to some member of A -- with the witness
searched one step past the bound.  For indices whose finite entries are
within the bound this reproduces maximality in the full semilattice; naive
maximality *inside* the truncated semilattice differs at the boundary
(projections rooted exactly at the bound sneak underneath) and is kept out
of the certification on purpose.
"""

import itertools
import math

from .semigroup import (
    T_ZERO,
    TElement,
    enumerate_idempotents,
    is_idempotent,
    mul_t,
    proj,
)

INF = math.inf


class EmptySupport(ValueError):
    """No projection within the bound evaluates to 1 (bound too small)."""


def extended_index(entries) -> tuple:
    """Validate and normalise an extended index (ints >= 0 and inf)."""
    out = []
    for v in entries:
        if v == INF:
            out.append(INF)
        else:
            iv = int(v)
            if iv < 0:
                raise ValueError("index entries must be non-negative")
            out.append(iv)
    if not out:
        raise ValueError("index must have length at least 1")
    return tuple(out)


def first_infinity(k) -> int:
    """Number of finite entries before the first inf (= ell if none)."""
    for i, v in enumerate(k):
        if v == INF:
            return i
    return len(k)


def canonical_index(k) -> tuple:
    """Pad everything after the first inf with inf; idempotent."""
    k = extended_index(k)
    r = first_infinity(k)
    if r >= len(k):
        return k
    return k[:r] + (INF,) * (len(k) - r)


def index_equivalent(k, k2) -> bool:
    """Same character: equal finite prefixes up to the first inf."""
    r = first_infinity(k)
    return r == first_infinity(k2) and tuple(k[:r]) == tuple(k2[:r])


def index_grid(ell: int, bound: int):
    """All canonical indices with entries in {0..bound, inf}, sorted."""
    out = []
    for r in range(ell + 1):
        for prefix in itertools.product(range(bound + 1), repeat=r):
            out.append(prefix + (INF,) * (ell - r))
    return sorted(out)


def tight_char_value(k, e: TElement) -> int:
    """Evaluate the tight character of an extended index on a projection."""
    if e.is_zero:
        return 0
    if not is_idempotent(e):
        raise ValueError("characters are evaluated on projections only")
    k = tuple(k)
    ell = len(k)
    if e.ell != ell:
        raise ValueError("index and projection live over different lengths")
    i = e.level
    if i <= ell:
        if tuple(e.m[: i - 1]) != k[: i - 1]:
            return 0
        return 1 if e.m[i - 1] <= k[i - 1] else 0
    return 1 if tuple(e.m) == k else 0


class TightCharacter:
    """Character given in closed form by a canonical extended index."""

    def __init__(self, index):
        self.index = canonical_index(index)

    def value(self, e: TElement) -> int:
        return tight_char_value(self.index, e)

    def __repr__(self):
        return f"TightCharacter({self.index!r})"


class PrincipalCharacter:
    """Indicator of the principal filter of a nonzero projection."""

    def __init__(self, root: TElement):
        if root.is_zero or not is_idempotent(root):
            raise ValueError("root must be a nonzero projection")
        self.root = root

    def value(self, e: TElement) -> int:
        if e.is_zero or not is_idempotent(e):
            return 0
        return 1 if mul_t(e, self.root) == self.root else 0

    def __repr__(self):
        return f"PrincipalCharacter({self.root!r})"


def filter_of(x, ell: int, bound: int):
    """The support of a character among projections with entries <= bound."""
    support = [e for e in enumerate_idempotents(ell, bound) if x.value(e) == 1]
    if not support:
        raise EmptySupport(f"no support below bound {bound}")
    return support


def is_ultrafilter_at(x, ell: int, bound: int) -> bool:
    """Certify maximality of the filter of x at the given truncation.

    Every projection g with entries <= bound and x(g) = 0 must be
    annihilated by a supported witness (x(e) = 1, eg = 0); witnesses are
    searched among projections with entries <= bound + 1.  The one-step
    enlargement covers the boundary chains; the certificate agrees with
    maximality in the untruncated semilattice whenever the finite entries
    of the character's index are <= bound.
    """
    filter_of(x, ell, bound)  # raises EmptySupport when degenerate
    witnesses = [
        e for e in enumerate_idempotents(ell, bound + 1) if x.value(e) == 1
    ]
    for g in enumerate_idempotents(ell, bound):
        if x.value(g) == 1:
            continue
        if not any(mul_t(e, g) == T_ZERO for e in witnesses):
            return False
    return True


def bounded_filters(ell: int, bound: int):
    """All filters of the truncated semilattice, as (root, up-set) pairs.

    In a finite meet-semilattice every filter is the up-set of its least
    element (the product of all its members), so enumerating nonzero
    projections enumerates filters.
    """
    idems = list(enumerate_idempotents(ell, bound))
    out = []
    for root in idems:
        upset = [e for e in idems if mul_t(e, root) == root]
        out.append((root, upset))
    return out


def brute_force_ultrafilters(ell: int, bound: int):
    """Roots of the truncated filters whose principal character passes the
    ultrafilter certificate."""
    out = []
    for root, upset in bounded_filters(ell, bound):
        if is_ultrafilter_at(PrincipalCharacter(root), ell, bound):
            out.append((root, upset))
    return out


def phi_injective_on_quotient(ell: int, bound: int) -> bool:
    """Characters agree on projections with entries <= bound + 1 exactly for
    equivalent indices, over the whole {0..bound, inf} grid."""
    idems = list(enumerate_idempotents(ell, bound + 1))
    grid = index_grid(ell, bound)
    for a in range(len(grid)):
        for b in range(a, len(grid)):
            k, k2 = grid[a], grid[b]
            same = all(
                tight_char_value(k, e) == tight_char_value(k2, e) for e in idems
            )
            if same != index_equivalent(k, k2):
                return False
    return True
