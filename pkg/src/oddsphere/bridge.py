"""Dictionary between transformation-groupoid triples and tight germs.

A canonical triple (z, x, w) with r finite entries before the first inf of
w maps to the germ at the tight character of w of the element

    B[r+1; t; m; n],   t = z + x_1 + .. + x_r,
                       m = (w_1, .., w_r, |x_{r+1}|, 0, ..),
                       n = (x_1+w_1, .., x_r+w_r, x_{r+1}+|x_{r+1}|, 0, ..),

with the slot facing the first inf dropped when w is all finite (then
m = w, n = w + x).  The reverse direction reads the translation off a
normalised germ: at an infinite base x_j = n_j - m_j up to the free slot
and z is pinned by the membership condition; at a finite base x = n - m and
z is the t-exponent of the element's word.  ``verify_isomorphism`` checks,
at a finite truncation, that this is a well-defined bijective groupoid
homomorphism.
"""

import itertools

from .germs import (
    Germ,
    act_index,
    composable,
    enumerate_germs,
    germ_canonical,
    germ_compose,
    germ_eq,
    germ_inverse,
    make_germ,
    unit_germ,
)
from .semigroup import telement, to_monomial
from .spectrum import INF, canonical_index, first_infinity, index_grid
from .triples import (
    SheuTriple,
    compose,
    enumerate_triples,
    inverse,
    is_member,
    is_unit,
    make_triple,
    source,
    unit_at,
)


class NotInImage(ValueError):
    """A germ with no triple mapping onto it; must never fire."""


def triple_to_germ(t: SheuTriple) -> Germ:
    """Forward map; accepts non-canonical representatives as well."""
    w = canonical_index(t.w)
    ell = len(w)
    r = first_infinity(w)
    tz = t.z + sum(t.x[:r])
    if r == ell:
        m = tuple(w)
        n = tuple(wi + xi for wi, xi in zip(w, t.x))
        elem = telement(ell + 1, tz, m, n)
    else:
        xr = t.x[r]
        m = tuple(w[:r]) + (abs(xr),) + (0,) * (ell - r - 1)
        n = (
            tuple(wi + xi for wi, xi in zip(w[:r], t.x[:r]))
            + (xr + abs(xr),)
            + (0,) * (ell - r - 1)
        )
        elem = telement(r + 1, tz, m, n)
    return make_germ(w, elem)


def germ_to_triple(g: Germ) -> SheuTriple:
    """Reverse map on normalised germs; raises NotInImage on failure."""
    g = germ_canonical(g)
    w = g.base
    ell = len(w)
    r = first_infinity(w)
    e = g.elem
    if e.level != r + 1:
        raise NotInImage(f"normalised germ at {w} has level {e.level}")
    if r == ell:
        x = tuple(b - a for a, b in zip(e.m, e.n))
        z = to_monomial(e).z_exp
    else:
        x = tuple(e.n[j] - e.m[j] for j in range(r + 1)) + (0,) * (ell - r - 1)
        z = -sum(x[: r + 1])
    if not is_member(z, x, w):
        raise NotInImage(f"({z}, {x}, {w}) violates the membership condition")
    t = make_triple(z, x, w)
    if not germ_eq(triple_to_germ(t), g):
        raise NotInImage(f"round trip failed for {g}")
    return t


def _index_sort_key(k):
    return tuple((1, 0) if v == INF else (0, v) for v in k)


def _lifts(t: SheuTriple, bound_w: int):
    """Non-canonical representatives of t within the w window."""
    ell = t.ell
    r = first_infinity(t.w)
    if r >= ell - 1:
        return [t]
    out = []
    tails = itertools.product(list(range(bound_w + 1)) + [INF], repeat=ell - r - 1)
    for tail in tails:
        w = tuple(t.w[:r]) + (INF,) + tail
        if is_member(t.z, t.x, w):
            out.append(SheuTriple(t.z, t.x, w))
    return out


def verify_isomorphism(ell: int, bound_z: int, bound_x: int, bound_w: int) -> dict:
    """Exhaustive truncated verification that the bridge is a groupoid
    isomorphism: well-defined on the collapsing relation, injective,
    surjective onto the enumerated germs, compatible with composition and
    inversion, and unit-preserving.  Returns a report whose counterexample
    lists must all be empty.
    """
    triples = enumerate_triples(ell, bound_z, bound_x, bound_w)
    images = [triple_to_germ(t) for t in triples]

    report = {
        "ell": ell,
        "bounds": {"z": bound_z, "x": bound_x, "w": bound_w},
        "triples": len(triples),
        "well_defined": [],
        "injective": [],
        "surjective": [],
        "homomorphism": [],
        "inversion": [],
        "units": [],
        "base_compatibility": [],
    }

    # (a) equivalent representatives map to equal germs
    for t, g in zip(triples, images):
        for lift in _lifts(t, bound_w):
            if not germ_eq(triple_to_germ(lift), g):
                report["well_defined"].append(
                    {"triple": tuple(t), "lift": tuple(lift)}
                )

    # (b) injectivity, bucketed per base (germs at distinct bases differ)
    by_base = {}
    for t, g in zip(triples, images):
        by_base.setdefault(t.w, []).append((t, g))
    for bucket in by_base.values():
        for a in range(len(bucket)):
            for b in range(a + 1, len(bucket)):
                if germ_eq(bucket[a][1], bucket[b][1]):
                    report["injective"].append(
                        {
                            "first": tuple(bucket[a][0]),
                            "second": tuple(bucket[b][0]),
                        }
                    )

    # (c) surjectivity: the reverse map is total and a right inverse on the
    # enumerated germ classes
    germ_bound = min(bound_x, bound_w)
    for g in enumerate_germs(ell, germ_bound, r_bound=bound_z):
        try:
            germ_to_triple(g)
        except NotInImage:
            report["surjective"].append(
                {"germ_base": g.base, "elem": tuple(g.elem)}
            )

    # the germ source must be the translated base; this makes triple- and
    # germ-composability literally the same condition
    for t, g in zip(triples, images):
        if act_index(g.base, g.elem) != source(t):
            report["base_compatibility"].append({"triple": tuple(t)})

    # (d) composability matches and composition intertwines
    image_of = {tuple(t): g for t, g in zip(triples, images)}
    by_range = {}
    for t in triples:
        by_range.setdefault(t.w, []).append(t)
    for t in triples:
        gt = image_of[tuple(t)]
        for u in by_range.get(source(t), []):
            gu = image_of[tuple(u)]
            if not composable(gt, gu):
                report["homomorphism"].append(
                    {
                        "first": tuple(t),
                        "second": tuple(u),
                        "reason": "composability",
                    }
                )
                continue
            lhs = triple_to_germ(compose(t, u))
            rhs = germ_compose(gt, gu)
            if not germ_eq(lhs, rhs):
                report["homomorphism"].append(
                    {"first": tuple(t), "second": tuple(u), "reason": "value"}
                )

    # (e) inversion intertwines
    for t, g in zip(triples, images):
        if not germ_eq(triple_to_germ(inverse(t)), germ_inverse(g)):
            report["inversion"].append({"triple": tuple(t)})

    # (f) units correspond to units, bijectively on base classes
    unit_bases = sorted({t.w for t in triples if is_unit(t)}, key=_index_sort_key)
    grid = sorted(index_grid(ell, bound_w), key=_index_sort_key)
    if unit_bases != grid:
        report["units"].append({"reason": "unit bases differ from the base grid"})
    for w in unit_bases:
        if not germ_eq(triple_to_germ(unit_at(w)), unit_germ(w)):
            report["units"].append({"base": w})

    report["ok"] = not any(
        report[k]
        for k in (
            "well_defined",
            "injective",
            "surjective",
            "homomorphism",
            "inversion",
            "units",
            "base_compatibility",
        )
    )
    return report
