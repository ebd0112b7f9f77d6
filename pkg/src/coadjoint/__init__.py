"""Exact computation of the co-adjoint graph polynomial and its siblings.

Four polynomials share one edge recursion f(G) = f(G - e) - f(G ∘ e),
differing only in how the contracted vertex is rewired: matching (nothing),
chromatic (union), adjoint (intersection), co-adjoint (symmetric
difference).  The package computes them by recursion, by edge-subset
partition functions, by Tutte-polynomial specialization, and by
generating-function identities, and cross-checks the routes against each
other.
"""

from .family import FamilyKind, family_poly
from .graphs import (
    SimpleGraph,
    build_named,
    emit_graph6,
    parse_graph6,
)
from .polynomials import BiPoly, Poly

__all__ = [
    "BiPoly",
    "FamilyKind",
    "Poly",
    "SimpleGraph",
    "build_named",
    "emit_graph6",
    "family_poly",
    "parse_graph6",
]
