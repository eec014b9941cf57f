"""The restricted transformation groupoid on extended indices.

Arrows are triples (z, x, w) with z an integer, x in Z^ell a translation
and w in (N u {inf})^ell a base point, subject to:

  * w and w + x stay non-negative (inf + anything = inf),
  * whenever w_i = inf:  x_{i+1} = ... = x_ell = 0  and  z = -(x_1+..+x_i).

The membership condition cuts an open subgroupoid out of the product of Z
with the translation groupoid; collapsing every entry after the first inf
to inf identifies arrows that act identically, and compositions are done on
these canonical representatives.

Conventions (anchored by the regular representation on arrows based at the
origin): the range of (z, x, w) is w, the source is w + x, products add the
(z, x) parts and keep the left base, inverses negate (z, x) and move the
base to w + x.
"""

import itertools
from typing import NamedTuple

from .spectrum import INF, canonical_index, extended_index, first_infinity, index_grid


class NotComposable(ValueError):
    """Source and range do not line up."""


class SheuTriple(NamedTuple):
    z: int
    x: tuple
    w: tuple

    @property
    def ell(self) -> int:
        return len(self.x)


def is_member(z: int, x, w) -> bool:
    """The membership condition, checked at every infinite position."""
    x = tuple(x)
    w = tuple(w)
    if len(x) != len(w):
        raise ValueError("x and w must have the same length")
    for i, wi in enumerate(w):
        if wi == INF:
            if any(x[i + 1 :]):
                return False
            if z != -sum(x[: i + 1]):
                return False
        else:
            if wi < 0 or wi + x[i] < 0:
                return False
    return True


def make_triple(z: int, x, w) -> SheuTriple:
    """Validate membership and return the canonical representative."""
    x = tuple(int(v) for v in x)
    w = extended_index(w)
    if not is_member(z, x, w):
        raise ValueError(f"({z}, {x}, {w}) violates the membership condition")
    return SheuTriple(int(z), x, canonical_index(w))


def canonicalize(t: SheuTriple) -> SheuTriple:
    return make_triple(t.z, t.x, t.w)


def add_index(w, x) -> tuple:
    """Translate an extended index; infinite entries absorb."""
    return tuple(INF if wi == INF else wi + xi for wi, xi in zip(w, x))


def source(t: SheuTriple) -> tuple:
    return canonical_index(add_index(t.w, t.x))


def range_(t: SheuTriple) -> tuple:
    return t.w


def compose(g: SheuTriple, h: SheuTriple) -> SheuTriple:
    """Defined when source(g) = range(h); (z, x) parts add, base stays."""
    if source(g) != h.w:
        raise NotComposable(f"source of {g} is not the base of {h}")
    return make_triple(
        g.z + h.z, tuple(a + b for a, b in zip(g.x, h.x)), g.w
    )


def inverse(t: SheuTriple) -> SheuTriple:
    return make_triple(-t.z, tuple(-v for v in t.x), source(t))


def unit_at(w) -> SheuTriple:
    w = canonical_index(w)
    return SheuTriple(0, (0,) * len(w), w)


def is_unit(t: SheuTriple) -> bool:
    return t.z == 0 and not any(t.x)


def _sort_key(t: SheuTriple):
    wk = tuple((1, 0) if v == INF else (0, v) for v in t.w)
    return (wk, t.x, t.z)


def enumerate_triples(ell: int, bound_z: int, bound_x: int, bound_w: int):
    """All canonical members with |z| <= bound_z, |x_i| <= bound_x and w
    entries in {0..bound_w, inf}."""
    out = []
    for w in index_grid(ell, bound_w):
        r = first_infinity(w)
        axes = []
        for j in range(r):
            axes.append(range(max(-bound_x, -w[j]), bound_x + 1))
        if r < ell:
            axes.append(range(-bound_x, bound_x + 1))  # slot facing the first inf
        for xs in itertools.product(*axes):
            x = xs + (0,) * (ell - len(xs))
            if r < ell:
                z_values = [-sum(x[: r + 1])]
            else:
                z_values = range(-bound_z, bound_z + 1)
            for z in z_values:
                if abs(z) > bound_z:
                    continue
                out.append(make_triple(z, x, w))
    return sorted(out, key=_sort_key)
