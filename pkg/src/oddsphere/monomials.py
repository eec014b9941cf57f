"""Exact symbolic algebra of tensor words in shift and projection operators.

The basic operators on l2(N) are the left shift S (S e_{j+1} = e_j,
S e_0 = 0) and the rank one projection p = |e_0><e_0|.  Three families of
primitive partial isometries are closed under operator composition:

    Pinched(a, b) = S*^a p S^b     the matrix unit |e_a><e_b|
    Free(a, b)    = S*^a S^b       shift by a - b, supported on j >= b
    Identity

A ``Monomial`` is a word  f_1 (x) ... (x) f_ell (x) t^z  made of one
primitive factor per tensor leg together with an integer power of the
bilateral right shift t on l2(Z) (t e_z = e_{z+1}).  Products are computed
factorwise and are again monomials, or the absorbed zero word.  Exponents
are unbounded Python integers; truncation only ever happens in the numeric
oracle, never here.
"""

from typing import NamedTuple, Optional

PINCHED = "P"
FREE = "F"
IDENTITY = "I"


class DimensionMismatch(ValueError):
    """Raised when words over different tensor lengths are combined."""


class PrimitiveFactor(NamedTuple):
    """One tensor leg: Pinched(a, b), Free(a, b) or Identity."""

    kind: str
    a: int = 0
    b: int = 0


IDENTITY_FACTOR = PrimitiveFactor(IDENTITY, 0, 0)


def pinched(a: int, b: int) -> PrimitiveFactor:
    if a < 0 or b < 0:
        raise ValueError("shift exponents must be non-negative")
    return PrimitiveFactor(PINCHED, a, b)


def free(a: int, b: int) -> PrimitiveFactor:
    """Free(0, 0) is the identity operator; it canonicalises to Identity."""
    if a < 0 or b < 0:
        raise ValueError("shift exponents must be non-negative")
    if a == 0 and b == 0:
        return IDENTITY_FACTOR
    return PrimitiveFactor(FREE, a, b)


def adjoint_factor(f: PrimitiveFactor) -> PrimitiveFactor:
    return PrimitiveFactor(f.kind, f.b, f.a)


def compose_factor(f: PrimitiveFactor, g: PrimitiveFactor) -> Optional[PrimitiveFactor]:
    """Operator product f.g (g acts first), or None for the zero operator.

    The four non-trivial cases follow from S S* = 1, S* S = 1 - p and
    p S^c S*^c p = [c = 0] p on l2(N):

        Pinched(a,b).Pinched(c,d) = [b = c] Pinched(a, d)
        Free(a,b).Free(c,d)       = Free(a + max(c-b, 0), d + max(b-c, 0))
        Free(a,b).Pinched(c,d)    = [c >= b] Pinched(a + c - b, d)
        Pinched(a,b).Free(c,d)    = [c <= b] Pinched(a, b - c + d)
    """
    if f.kind == IDENTITY:
        return g
    if g.kind == IDENTITY:
        return f
    if f.kind == PINCHED and g.kind == PINCHED:
        return pinched(f.a, g.b) if f.b == g.a else None
    if f.kind == FREE and g.kind == FREE:
        return free(f.a + max(g.a - f.b, 0), g.b + max(f.b - g.a, 0))
    if f.kind == FREE and g.kind == PINCHED:
        return pinched(f.a + g.a - f.b, g.b) if g.a >= f.b else None
    # Pinched . Free
    return pinched(f.a, f.b - g.a + g.b) if g.a <= f.b else None


class Monomial(NamedTuple):
    factors: tuple
    z_exp: int = 0
    is_zero: bool = False

    @property
    def ell(self) -> int:
        return len(self.factors)

    def __mul__(self, other):  # type: ignore[override]
        return mul(self, other)

    def star(self):
        return adjoint(self)


#: The unique absorbed zero word (tensor length is irrelevant for it).
ZERO = Monomial((), 0, True)


def monomial(factors, z_exp: int = 0) -> Monomial:
    facs = tuple(factors)
    for f in facs:
        if not isinstance(f, PrimitiveFactor):
            raise TypeError(f"not a primitive factor: {f!r}")
    return Monomial(facs, int(z_exp), False)


def identity_monomial(ell: int) -> Monomial:
    if ell < 1:
        raise ValueError("tensor length must be at least 1")
    return Monomial((IDENTITY_FACTOR,) * ell, 0, False)


def is_identity(x: Monomial) -> bool:
    return not x.is_zero and x.z_exp == 0 and all(
        f.kind == IDENTITY for f in x.factors
    )


def mul(x: Monomial, y: Monomial) -> Monomial:
    """Factorwise product with zero absorption; t-exponents add."""
    if x.is_zero or y.is_zero:
        return ZERO
    if len(x.factors) != len(y.factors):
        raise DimensionMismatch(
            f"tensor lengths differ: {len(x.factors)} vs {len(y.factors)}"
        )
    out = []
    for f, g in zip(x.factors, y.factors):
        h = compose_factor(f, g)
        if h is None:
            return ZERO
        out.append(h)
    return Monomial(tuple(out), x.z_exp + y.z_exp, False)


def adjoint(x: Monomial) -> Monomial:
    """Involution: legs conjugate independently, the t-exponent negates."""
    if x.is_zero:
        return ZERO
    return Monomial(tuple(adjoint_factor(f) for f in x.factors), -x.z_exp, False)
