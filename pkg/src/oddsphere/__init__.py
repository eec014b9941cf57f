"""Shift-projection inverse semigroup of the odd quantum spheres, its tight
groupoid, an independent transformation-groupoid picture, and a truncated
sparse-operator oracle that cross-checks every symbolic identity."""

from .monomials import (
    ZERO,
    DimensionMismatch,
    Monomial,
    PrimitiveFactor,
    adjoint,
    compose_factor,
    free,
    identity_monomial,
    mul,
    pinched,
)
from .semigroup import (
    T_ZERO,
    NotInT,
    TElement,
    check_relations,
    enumerate_elements,
    enumerate_idempotents,
    from_monomial,
    generator,
    identity_element,
    is_idempotent,
    mul_t,
    proj,
    star_t,
    telement,
    to_monomial,
    word_decompose,
    word_value,
)
from .spectrum import (
    INF,
    EmptySupport,
    PrincipalCharacter,
    TightCharacter,
    brute_force_ultrafilters,
    canonical_index,
    extended_index,
    filter_of,
    first_infinity,
    index_equivalent,
    index_grid,
    is_ultrafilter_at,
    phi_injective_on_quotient,
    tight_char_value,
)
from .germs import (
    Germ,
    act_index,
    enumerate_germs,
    germ_compose,
    germ_eq,
    germ_inverse,
    in_domain,
    make_germ,
    unit_germ,
)
from .triples import SheuTriple, compose, enumerate_triples, inverse, is_member, make_triple
from .bridge import NotInImage, germ_to_triple, triple_to_germ, verify_isomorphism
from .oracle import (
    TruncatedOperator,
    TruncationSpec,
    compare_symbolic_numeric,
    element_operator,
    factor_operator,
    monomial_operator,
    regular_representation,
    shift_unitary,
    shifted_generator,
    sphere_generator,
    sphere_generator_adjoint,
    sphere_relations_check,
)

__version__ = "0.1.0"
