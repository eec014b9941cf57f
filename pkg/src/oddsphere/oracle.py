"""Sparse truncated-operator models and the symbolic/numeric cross-check.

Everything symbolic in this package has a concrete model on the Hilbert
space l2(N)^(x ell) (x) l2(Z): the left shift S, the rank-one projection
p, the bilateral right shift t, the canonical words, the q-deformed sphere
generators and the regular representation on arrows based at the origin.
This module builds those models on the truncated space

    span{ e_j : 0 <= j <= n_max }^(x ell)  (x)  span{ e_z : |z| <= z_max }

as scipy sparse matrices.  Truncated shifts are not partial isometries at
the window edge, so every operator carries an interior mask: the set of
basis columns whose true image provably stays inside the window (columns
the untruncated operator kills are exact as well).  Masks compose under
products by following the nonzero rows of each column, and comparisons are
only ever made on masked columns, which makes truncation artifacts
irrelevant and is stable under window growth.

At q = 0 all matrices are 0/1 partial permutations and comparisons are
entrywise exact; for q in (0, 1) the defining sphere relations are checked
to floating-point residuals.
"""

import itertools
from dataclasses import dataclass
from functools import reduce

import numpy as np
from scipy import sparse

from .bridge import germ_to_triple
from .germs import act_index, make_germ
from .monomials import FREE, IDENTITY, PINCHED, Monomial, PrimitiveFactor
from .semigroup import TElement, mul_t, star_t, to_monomial
from .triples import source


@dataclass(frozen=True)
class TruncationSpec:
    ell: int
    n_max: int
    z_max: int
    q: float = 0.0

    def __post_init__(self):
        if self.ell < 1:
            raise ValueError("ell must be at least 1")
        if self.n_max < 1 or self.z_max < 1:
            raise ValueError("cutoffs must be at least 1")
        if not 0.0 <= self.q < 1.0:
            raise ValueError("q must lie in [0, 1)")

    @property
    def leg_dim(self) -> int:
        return self.n_max + 1

    @property
    def z_dim(self) -> int:
        return 2 * self.z_max + 1

    @property
    def total_dim(self) -> int:
        return self.leg_dim**self.ell * self.z_dim

    def basis_index(self, js, z: int) -> int:
        idx = 0
        for j in js:
            idx = idx * self.leg_dim + j
        return idx * self.z_dim + (z + self.z_max)


@dataclass
class TruncatedOperator:
    """A sparse matrix together with its exact-column mask."""

    matrix: sparse.csr_matrix
    mask: np.ndarray

    def compose(self, other: "TruncatedOperator") -> "TruncatedOperator":
        mat = (self.matrix @ other.matrix).tocsr()
        om = other.matrix.tocsc()
        ncols = om.shape[1]
        counts = np.diff(om.indptr)
        colids = np.repeat(np.arange(ncols), counts)
        bad = ~self.mask
        bad_per_col = np.bincount(colids[bad[om.indices]], minlength=ncols)
        return TruncatedOperator(mat, other.mask & (bad_per_col == 0))

    def __matmul__(self, other):
        return self.compose(other)

    def __add__(self, other):
        return TruncatedOperator(self.matrix + other.matrix, self.mask & other.mask)

    def __sub__(self, other):
        return TruncatedOperator(self.matrix - other.matrix, self.mask & other.mask)

    def scale(self, c) -> "TruncatedOperator":
        return TruncatedOperator(self.matrix * c, self.mask.copy())

    def masked_max(self) -> float:
        """Largest absolute entry among masked columns."""
        sel = sparse.diags(self.mask.astype(float))
        data = (self.matrix @ sel).tocsr().data
        return float(np.abs(data).max()) if data.size else 0.0

    def residual_against(self, other: "TruncatedOperator") -> float:
        return (self - other).masked_max()

    def agrees_with(self, other: "TruncatedOperator") -> bool:
        """Entrywise equality on the common masked columns."""
        return self.residual_against(other) == 0.0


def zero_operator(spec: TruncationSpec) -> TruncatedOperator:
    dim = spec.total_dim
    return TruncatedOperator(
        sparse.csr_matrix((dim, dim)), np.ones(dim, dtype=bool)
    )


def identity_operator(spec: TruncationSpec) -> TruncatedOperator:
    dim = spec.total_dim
    return TruncatedOperator(
        sparse.identity(dim, format="csr"), np.ones(dim, dtype=bool)
    )


# -- single legs --------------------------------------------------------------

def factor_operator(f: PrimitiveFactor, spec: TruncationSpec) -> TruncatedOperator:
    """One l2(N) leg on its own (dimension n_max + 1)."""
    n = spec.n_max
    dim = n + 1
    mask = np.ones(dim, dtype=bool)
    rows, cols, vals = [], [], []
    if f.kind == IDENTITY:
        return TruncatedOperator(sparse.identity(dim, format="csr"), mask)
    if f.kind == PINCHED:
        if f.b <= n:
            if f.a <= n:
                rows.append(f.a)
                cols.append(f.b)
                vals.append(1.0)
            else:
                mask[f.b] = False
    else:  # FREE
        for j in range(f.b, dim):
            i = j - f.b + f.a
            if i <= n:
                rows.append(i)
                cols.append(j)
                vals.append(1.0)
            else:
                mask[j] = False
    mat = sparse.csr_matrix((vals, (rows, cols)), shape=(dim, dim))
    return TruncatedOperator(mat, mask)


def z_power_operator(k: int, spec: TruncationSpec) -> TruncatedOperator:
    """t^k on the l2(Z) leg on its own (dimension 2 z_max + 1)."""
    m = spec.z_max
    dim = 2 * m + 1
    mask = np.ones(dim, dtype=bool)
    rows, cols = [], []
    for z in range(-m, m + 1):
        zz = z + k
        if -m <= zz <= m:
            rows.append(zz + m)
            cols.append(z + m)
        else:
            mask[z + m] = False
    mat = sparse.csr_matrix(
        (np.ones(len(rows)), (rows, cols)), shape=(dim, dim)
    )
    return TruncatedOperator(mat, mask)


def _tensor(legs) -> TruncatedOperator:
    mat = reduce(lambda a, b: sparse.kron(a, b, format="csr"), (l.matrix for l in legs))
    mask = reduce(np.kron, (l.mask for l in legs)).astype(bool)
    return TruncatedOperator(mat.tocsr(), mask)


# -- words ---------------------------------------------------------------------

def monomial_operator(x: Monomial, spec: TruncationSpec) -> TruncatedOperator:
    if x.is_zero:
        return zero_operator(spec)
    if len(x.factors) != spec.ell:
        raise ValueError("monomial and truncation have different tensor lengths")
    legs = [factor_operator(f, spec) for f in x.factors]
    legs.append(z_power_operator(x.z_exp, spec))
    return _tensor(legs)


def element_operator(s: TElement, spec: TruncationSpec) -> TruncatedOperator:
    return monomial_operator(to_monomial(s), spec)


def compare_symbolic_numeric(a: TElement, b: TElement, spec: TruncationSpec) -> dict:
    """The oracle contract: the word of a product must match the product of
    the words, entrywise on the common interior."""
    lhs = element_operator(mul_t(a, b), spec)
    rhs = element_operator(a, spec) @ element_operator(b, spec)
    residual = lhs.residual_against(rhs)
    return {
        "equal": residual == 0.0,
        "residual": residual,
        "masked_columns": int((lhs.mask & rhs.mask).sum()),
    }


# -- q-deformed generators -------------------------------------------------------

def _qn_leg(spec: TruncationSpec) -> TruncatedOperator:
    """diag(q^j); at q = 0 this is the rank-one projection p."""
    j = np.arange(spec.leg_dim, dtype=float)
    diag = spec.q**j
    diag[0] = 1.0
    return TruncatedOperator(
        sparse.diags(diag, format="csr"), np.ones(spec.leg_dim, dtype=bool)
    )


def _down_leg(spec: TruncationSpec) -> TruncatedOperator:
    """sqrt(1 - q^(2 N)) S*: raises j to j + 1 with weight sqrt(1-q^(2j+2))."""
    n = spec.n_max
    dim = n + 1
    mask = np.ones(dim, dtype=bool)
    mask[n] = False
    j = np.arange(n)
    vals = np.sqrt(1.0 - spec.q ** (2.0 * (j + 1)))
    mat = sparse.csr_matrix((vals, (j + 1, j)), shape=(dim, dim))
    return TruncatedOperator(mat, mask)


def _up_leg(spec: TruncationSpec) -> TruncatedOperator:
    """Adjoint of the down leg: lowers j to j - 1, killing e_0; all columns
    stay in the window."""
    n = spec.n_max
    dim = n + 1
    j = np.arange(1, dim)
    vals = np.sqrt(1.0 - spec.q ** (2.0 * j))
    mat = sparse.csr_matrix((vals, (j - 1, j)), shape=(dim, dim))
    return TruncatedOperator(mat, np.ones(dim, dtype=bool))


def _identity_leg(spec: TruncationSpec) -> TruncatedOperator:
    return TruncatedOperator(
        sparse.identity(spec.leg_dim, format="csr"),
        np.ones(spec.leg_dim, dtype=bool),
    )


def _z_identity_leg(spec: TruncationSpec) -> TruncatedOperator:
    return TruncatedOperator(
        sparse.identity(spec.z_dim, format="csr"), np.ones(spec.z_dim, dtype=bool)
    )


def sphere_generator(k: int, spec: TruncationSpec) -> TruncatedOperator:
    """The k-th generator in the weighted-shift representation: k - 1 legs
    of diag(q^j), then a weighted co-shift (or the bilateral shift on the
    last leg when k = ell + 1), identities elsewhere."""
    ell = spec.ell
    if not 1 <= k <= ell + 1:
        raise ValueError(f"generator index must lie in 1..{ell + 1}")
    legs = []
    for i in range(1, ell + 1):
        if i < k:
            legs.append(_qn_leg(spec))
        elif i == k:
            legs.append(_down_leg(spec))
        else:
            legs.append(_identity_leg(spec))
    if k == ell + 1:
        legs = [_qn_leg(spec) for _ in range(ell)]
        legs.append(z_power_operator(1, spec))
    else:
        legs.append(_z_identity_leg(spec))
    return _tensor(legs)


def sphere_generator_adjoint(k: int, spec: TruncationSpec) -> TruncatedOperator:
    """Adjoint of ``sphere_generator``, built leg by leg so that it carries
    its own exact mask."""
    ell = spec.ell
    if not 1 <= k <= ell + 1:
        raise ValueError(f"generator index must lie in 1..{ell + 1}")
    if k == ell + 1:
        legs = [_qn_leg(spec) for _ in range(ell)]
        legs.append(z_power_operator(-1, spec))
        return _tensor(legs)
    legs = []
    for i in range(1, ell + 1):
        if i < k:
            legs.append(_qn_leg(spec))
        elif i == k:
            legs.append(_up_leg(spec))
        else:
            legs.append(_identity_leg(spec))
    legs.append(_z_identity_leg(spec))
    return _tensor(legs)


def shift_unitary(spec: TruncationSpec, sign: int = 1) -> TruncatedOperator:
    """The permutation e_{j, z} -> e_{j, z + sign * (j_1 + .. + j_ell)};
    off-window images are dropped and recorded in the mask."""
    d = spec.leg_dim
    m = spec.z_max
    idx = np.arange(d)
    sums = reduce(np.add.outer, [idx] * spec.ell).ravel() if spec.ell > 1 else idx
    jrep = np.repeat(np.arange(d**spec.ell), spec.z_dim)
    zcol = np.tile(np.arange(-m, m + 1), d**spec.ell)
    znew = zcol + sign * sums[jrep]
    valid = np.abs(znew) <= m
    cols = np.arange(spec.total_dim)[valid]
    rows = jrep[valid] * spec.z_dim + znew[valid] + m
    mat = sparse.csr_matrix(
        (np.ones(cols.size), (rows, cols)),
        shape=(spec.total_dim, spec.total_dim),
    )
    return TruncatedOperator(mat, valid)


def shifted_generator(k: int, spec: TruncationSpec) -> TruncatedOperator:
    """Conjugate of ``sphere_generator`` by the shift unitary; at q = 0
    these are the matrices of the semigroup generators."""
    u = shift_unitary(spec, 1)
    ustar = shift_unitary(spec, -1)
    return u @ sphere_generator(k, spec) @ ustar


def sphere_relations_check(spec: TruncationSpec, tol: float = 1e-10) -> dict:
    """Residuals of the four defining sphere relations on the interior.

    The generator family is z_k -> the weighted shifts above; relations:
    exchange z_i z_j = q z_j z_i (j < i), star exchange
    z_i* z_j = q z_j z_i* (i != j), the commutation defect
    z_i z_i* - z_i* z_i + (1 - q^2) sum_{k>i} z_k z_k* = 0 and the unit sum
    sum_k z_k z_k* = 1.
    """
    ell = spec.ell
    q = spec.q
    ks = range(1, ell + 2)
    y = {k: sphere_generator(k, spec) for k in ks}
    ys = {k: sphere_generator_adjoint(k, spec) for k in ks}

    relations = []

    worst = 0.0
    for i in ks:
        for j in ks:
            if j < i:
                res = (y[i] @ y[j]).residual_against((y[j] @ y[i]).scale(q))
                worst = max(worst, res)
    relations.append({"name": "exchange", "max_residual": worst})

    worst = 0.0
    for i in ks:
        for j in ks:
            if i != j:
                res = (ys[i] @ y[j]).residual_against((y[j] @ ys[i]).scale(q))
                worst = max(worst, res)
    relations.append({"name": "star-exchange", "max_residual": worst})

    worst = 0.0
    for i in ks:
        op = y[i] @ ys[i] - ys[i] @ y[i]
        for k in ks:
            if k > i:
                op = op + (y[k] @ ys[k]).scale(1.0 - q * q)
        worst = max(worst, op.masked_max())
    relations.append({"name": "commutation-defect", "max_residual": worst})

    total = zero_operator(spec)
    for k in ks:
        total = total + y[k] @ ys[k]
    relations.append(
        {
            "name": "unit-sum",
            "max_residual": total.residual_against(identity_operator(spec)),
        }
    )

    overall = max(rel["max_residual"] for rel in relations)
    return {
        "ell": ell,
        "q": q,
        "n_max": spec.n_max,
        "z_max": spec.z_max,
        "relations": relations,
        "checked": len(relations),
        "failed": sum(1 for rel in relations if rel["max_residual"] > tol),
        "max_residual": overall,
    }


# -- regular representation -------------------------------------------------------

def regular_representation(s: TElement, spec: TruncationSpec) -> TruncatedOperator:
    """The matrix of the indicator of the basis set of s in the regular
    representation on arrows based at the origin.

    Arrows with range the origin are (z, x, 0) with x >= 0; the arrow is
    identified with the basis vector e_{x, -z} (the vector its word's
    adjoint produces from e_{0, 0}).  A column (y, zeta) carries a single 1
    at row (w, zeta + dz) where w is the unique grid point with an arrow of
    the basis set of s running from y to it -- found through the
    triple-to-germ dictionary -- and dz is the t-exponent of the word of s.
    Columns whose true row leaves the window are unmasked.
    """
    if s.is_zero:
        return zero_operator(spec)
    if s.ell != spec.ell:
        raise ValueError("element and truncation have different tensor lengths")
    n, m = spec.n_max, spec.z_max
    dz = to_monomial(s).z_exp
    sstar = star_t(s)
    mask = np.ones(spec.total_dim, dtype=bool)
    rows, cols = [], []
    for y in itertools.product(range(n + 1), repeat=spec.ell):
        w = act_index(y, sstar)
        if w is None:
            continue  # no arrow ends at y: exact zero columns
        w = tuple(int(v) for v in w)
        if all(v <= n for v in w):
            arrow = germ_to_triple(make_germ(w, s))
            assert source(arrow) == y and arrow.z == dz
            for z in range(-m, m + 1):
                col = spec.basis_index(y, z)
                zr = z + dz
                if -m <= zr <= m:
                    rows.append(spec.basis_index(w, zr))
                    cols.append(col)
                else:
                    mask[col] = False
        else:
            for z in range(-m, m + 1):
                mask[spec.basis_index(y, z)] = False
    mat = sparse.csr_matrix(
        (np.ones(len(rows)), (rows, cols)),
        shape=(spec.total_dim, spec.total_dim),
    )
    return TruncatedOperator(mat, mask)
