"""Germs of the partial action of the semigroup on tight characters.

The semigroup acts on characters from the right by (x.s)(e) = x(s e s*),
defined exactly on the domain D_s = {x : x(ss*) = 1}.  On tight characters
the action has a closed form on extended indices: an element of level i
replaces the first i-1 entries by its n-prefix, shifts the i-th entry by
n_i - m_i, and keeps the tail (level ell+1 replaces everything by n).

A germ is a pair (base character, element) modulo the relation that some
supported projection equalises the two elements.  Germs compose by
(x, s)(x.s, t) = (x, st) and invert by (x, s)^-1 = (x.s, s*); they form the
arrows of an etale groupoid whose units are the tight characters.

Stored germs are normalised by premultiplying the element with the
projection p_{r+1}(k_1..k_r, 0, ..) attached to the base index (r = number
of finite entries before the first inf).  At an all-finite base this pins
the element completely; at an infinite base the free slot of the element is
only determined up to sliding both exponents by the same amount, so the
normal form is not unique and ``germ_eq`` (a finite witness search along
the base's chain of projections) remains the authority on equality.
"""

import itertools
from typing import NamedTuple

from .semigroup import (
    T_ZERO,
    TElement,
    enumerate_elements,
    identity_element,
    mul_t,
    proj,
    star_t,
    telement,
)
from .spectrum import (
    INF,
    canonical_index,
    first_infinity,
    index_equivalent,
    index_grid,
    tight_char_value,
)


class NotComposable(ValueError):
    """Source and range do not line up."""


class Germ(NamedTuple):
    base: tuple
    elem: TElement


def in_domain(k, s: TElement) -> bool:
    """Membership of the tight character of k in D_s, i.e. x(ss*) = 1."""
    if s.is_zero:
        return False
    return tight_char_value(k, proj(s.level, s.m)) == 1


def act_index(k, s: TElement):
    """The index of (x.s) for x tight with index k, or None outside D_s.

    Closed form verified against the defining evaluation by sampling in the
    test suite: level i <= ell sends k to
    (n_1, .., n_{i-1}, k_i - m_i + n_i, k_{i+1}, .., k_ell) and level ell+1
    sends k = m to n.
    """
    if s.is_zero:
        return None
    k = canonical_index(k)
    if not in_domain(k, s):
        return None
    ell = s.ell
    i = s.level
    if i <= ell:
        ki = k[i - 1]
        slot = INF if ki == INF else ki - s.m[i - 1] + s.n[i - 1]
        new = s.n[: i - 1] + (slot,) + k[i:]
    else:
        new = s.n
    return canonical_index(new)


def _base_projection(base) -> TElement:
    """p_{r+1}((k_1..k_r, 0, ..)) for the base index; at an all-finite base
    this is the minimal supported projection p_{ell+1}(k)."""
    ell = len(base)
    r = first_infinity(base)
    if r == ell:
        return proj(ell + 1, base)
    return proj(r + 1, tuple(base[:r]) + (0,) * (ell - r))


def make_germ(base, elem: TElement) -> Germ:
    """Build the stored (normalised) germ of elem at the base index."""
    base = canonical_index(base)
    if not in_domain(base, elem):
        raise ValueError(f"index {base} is outside the domain of {elem}")
    normalised = mul_t(_base_projection(base), elem)
    assert not normalised.is_zero
    return Germ(base, normalised)


def germ_canonical(g: Germ) -> Germ:
    """Re-normalise a germ; idempotent, germ_eq-invariant."""
    return make_germ(g.base, g.elem)


def germ_eq(g: Germ, h: Germ) -> bool:
    """Germ equality through the supported witness family.

    After normalising, equality holds iff some projection
    e_u = p_{r+1}((k_1..k_r, u, 0..)) with u <= 1 + (largest index in either
    element) equalises the two elements.  Any supported equalising
    projection dominates a member of this family, so the search is complete;
    the bound suffices because beyond it e_u acts on the free slot purely by
    exponent sliding.
    """
    if not index_equivalent(g.base, h.base):
        return False
    g = germ_canonical(g)
    h = germ_canonical(h)
    if g.elem == h.elem:
        return True
    base = g.base
    ell = len(base)
    r = first_infinity(base)
    if r == ell:
        return False  # the base projection already pins the element
    cap = 1 + max(
        itertools.chain(g.elem.m, g.elem.n, h.elem.m, h.elem.n), default=0
    )
    prefix = tuple(base[:r])
    pad = (0,) * (ell - r - 1)
    for u in range(cap + 1):
        e = proj(r + 1, prefix + (u,) + pad)
        if mul_t(e, g.elem) == mul_t(e, h.elem):
            return True
    return False


def germ_key(g: Germ):
    """Hashable invariant separating germ classes (g must be normalised).

    At a finite base the normalised element is the class; at an infinite
    base the class is fixed by the n-prefix up to the first inf and the
    exponent difference at the free slot.  The base is part of the key.
    """
    ell = len(g.base)
    r = first_infinity(g.base)
    if r == ell:
        return (g.base, "fin", g.elem.r, g.elem.m, g.elem.n)
    return (g.base, "inf", g.elem.n[:r], g.elem.n[r] - g.elem.m[r])


def source_index(g: Germ):
    return act_index(g.base, g.elem)


def range_index(g: Germ):
    return g.base


def composable(g: Germ, h: Germ) -> bool:
    tgt = act_index(g.base, g.elem)
    return tgt is not None and index_equivalent(tgt, h.base)


def germ_compose(g: Germ, h: Germ) -> Germ:
    """(x, s)(x.s, t) = (x, st)."""
    if not composable(g, h):
        raise NotComposable(f"source of {g} is not the base of {h}")
    product = mul_t(g.elem, h.elem)
    return make_germ(g.base, product)


def germ_inverse(g: Germ) -> Germ:
    """(x, s)^-1 = (x.s, s*)."""
    tgt = act_index(g.base, g.elem)
    if tgt is None:
        raise ValueError("germ base outside the domain of its element")
    return make_germ(tgt, star_t(g.elem))


def unit_germ(base) -> Germ:
    base = canonical_index(base)
    return make_germ(base, identity_element(len(base)))


def is_unit_germ(g: Germ) -> bool:
    return germ_eq(g, unit_germ(g.base))


def _index_sort_key(k):
    return tuple((1, 0) if v == INF else (0, v) for v in k)


def germ_sort_key(g: Germ):
    return (_index_sort_key(g.base), g.elem.level, g.elem.r, g.elem.m, g.elem.n)


def enumerate_germs(ell: int, bound: int, r_bound: int = None):
    """All germ classes with base entries in {0..bound, inf} and element
    indices <= bound (twists up to r_bound), one normalised representative
    each, deduplicated by germ_eq."""
    if r_bound is None:
        r_bound = bound
    out = []
    for base in index_grid(ell, bound):
        seen = {}
        for s in enumerate_elements(ell, bound, r_bound):
            if not in_domain(base, s):
                continue
            g = make_germ(base, s)
            key = germ_key(g)
            if key in seen:
                assert germ_eq(seen[key], g)
                continue
            for other in seen.values():  # keys must separate classes
                assert not germ_eq(other, g)
            seen[key] = g
        out.extend(sorted(seen.values(), key=germ_sort_key))
    return out


# ---------------------------------------------------------------------------
# Basis sets of the groupoid topology, at a finite window of bases.
# ---------------------------------------------------------------------------

def theta_set(s: TElement, bound: int):
    """Germs of a fixed element over all grid bases in its domain.

    This is the basic compact-open set of the groupoid topology, truncated
    to bases with entries in {0..bound, inf}.
    """
    ell = s.ell
    return [
        make_germ(w, s) for w in index_grid(ell, bound) if in_domain(w, s)
    ]


def theta_product_classes(s: TElement, t: TElement, bound: int):
    """Pointwise products germ(w, s) . germ(w.s, t) over grid bases w.

    Parametrises the setwise product of the two basis sets: the germ at w
    exists exactly when w is in the domain of s and w.s in the domain of t.
    Equality with ``theta_set(st, bound)`` as germ-class sets is the basis
    identity theta_s theta_t = theta_{st} at this truncation.
    """
    out = []
    ell = s.ell
    for w in index_grid(ell, bound):
        if not in_domain(w, s):
            continue
        v = act_index(w, s)
        if not in_domain(v, t):
            continue
        out.append(germ_compose(make_germ(w, s), make_germ(v, t)))
    return out


def theta_inverse_classes(s: TElement, bound: int):
    """Inverses of germs of s whose source lands in the grid window.

    The enumeration runs bases over an enlarged grid so that every germ of
    s* based in the {0..bound, inf} window is reached; equality with
    ``theta_set(star_t(s), bound)`` is the identity theta_s^-1 = theta_{s*}.
    """
    ell = s.ell
    reach = bound + max(itertools.chain(s.m, s.n), default=0)
    out = []
    grid = set(index_grid(ell, bound))
    for w in index_grid(ell, reach):
        if not in_domain(w, s):
            continue
        v = act_index(w, s)
        if v in grid:
            out.append(germ_inverse(make_germ(w, s)))
    return out


def same_germ_classes(left, right) -> bool:
    """Compare two germ collections as sets of germ classes."""
    lk = {germ_key(germ_canonical(g)): g for g in left}
    rk = {germ_key(germ_canonical(g)): g for g in right}
    if set(lk) != set(rk):
        return False
    return all(germ_eq(lk[key], rk[key]) for key in lk)
