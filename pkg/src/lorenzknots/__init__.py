"""Lorenz knots from Young diagrams: braids, monodromy, Alexander polynomials
and the location of their zeroes."""

__version__ = "0.1.0"

from .braid import BraidWord, KnotInvariants, NotAKnotError, invariants, is_knot, lorenz_braid
from .diagram import Cell, DiagramError, YoungDiagram, classify, from_partition
from .homology import CycleVector, intersection_form, mixed_inverse_monodromy, mixed_monodromy, standard_monodromy
from .polynomial import IntPolynomial, LaurentPolynomial, alexander, alexander_from_burau, alexander_from_monodromy, charpoly
from .spectra import RootSet, annulus_bound, lorenz_exclusion, r_invariant, roots

__all__ = [
    "BraidWord",
    "Cell",
    "CycleVector",
    "DiagramError",
    "IntPolynomial",
    "KnotInvariants",
    "LaurentPolynomial",
    "NotAKnotError",
    "RootSet",
    "YoungDiagram",
    "alexander",
    "alexander_from_burau",
    "alexander_from_monodromy",
    "annulus_bound",
    "charpoly",
    "classify",
    "from_partition",
    "intersection_form",
    "invariants",
    "is_knot",
    "lorenz_braid",
    "lorenz_exclusion",
    "mixed_inverse_monodromy",
    "mixed_monodromy",
    "r_invariant",
    "roots",
    "standard_monodromy",
]
