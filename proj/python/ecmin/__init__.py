"""Exact minimal models of rational elliptic curves with prescribed torsion.

Thin package wrapper around the _ecmin extension module.
"""

from _ecmin import (  # noqa: F401
    DomainError,
    IdentifyError,
    analyze,
    build_et,
    cube_square_decompose,
    factor,
    families,
    family_invariants,
    frey_minimal,
    identify,
    invariants,
    kraus_admissible,
    lkc_minimal_model,
    point_order,
    squarefree_decompose,
    universal_curve,
    verify_family,
)

__all__ = [
    "DomainError",
    "IdentifyError",
    "analyze",
    "build_et",
    "cube_square_decompose",
    "factor",
    "families",
    "family_invariants",
    "frey_minimal",
    "identify",
    "invariants",
    "kraus_admissible",
    "lkc_minimal_model",
    "point_order",
    "squarefree_decompose",
    "universal_curve",
    "verify_family",
]
