"""Principal bundles and gauge-group decompositions over connected sums."""

from ._core import (
    DomainError,
    ParseError,
    bezout,
    classify,
    decompose,
    determinant,
    equivalent,
    gcd_m,
    lookup,
    orbit_reduce,
    pi6_order,
    pointed_homotopy_groups,
    row_echelon,
    same_orbit,
    shipped_lie_groups,
    smith_invariants,
    tbar,
)

__all__ = [
    "DomainError",
    "ParseError",
    "bezout",
    "classify",
    "decompose",
    "determinant",
    "equivalent",
    "gcd_m",
    "lookup",
    "orbit_reduce",
    "pi6_order",
    "pointed_homotopy_groups",
    "row_echelon",
    "same_orbit",
    "shipped_lie_groups",
    "smith_invariants",
    "tbar",
]
