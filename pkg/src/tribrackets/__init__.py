"""Region colorings of knot/link diagrams by ternary quasigroups (tribrackets)
and their skein enhancements over finite modular rings.

The package computes, for an oriented link diagram given as a PD code:

* the tribracket counting invariant (number of region colorings),
* the skein enhancement: a state-sum value in Z_m per coloring, collected
  into a one-variable "polynomial" with exponents in Z_m,

and provides exhaustive searches for the coefficient structures (brackets)
that make the state sum invariant, plus a catalog of small knots and links.
"""

from .rings import ModulusRing, RingElement, NonUnitError, RingMismatchError
from .tribracket import (
    Tribracket,
    AxiomReport,
    NotQuasigroupError,
    NotAGroupError,
    make_dehn,
    make_alexander,
    enumerate_tribrackets,
)
from .bracket import (
    TribracketBracket,
    BracketAxiomReport,
    NotConstantError,
    derive_delta,
    derive_w,
    verify_bracket,
    make_kauffman,
    make_cocycle,
    search_brackets,
)
from .diagram import PDCode, LinkDiagram, SmoothingState, parse_pd, build_diagram
from .invariant import (
    Coloring,
    InvariantPolynomial,
    enumerate_colorings,
    counting_invariant,
    beta,
    phi,
    phi_multiset,
)
from . import catalog

__all__ = [
    "ModulusRing",
    "RingElement",
    "NonUnitError",
    "RingMismatchError",
    "Tribracket",
    "AxiomReport",
    "NotQuasigroupError",
    "NotAGroupError",
    "make_dehn",
    "make_alexander",
    "enumerate_tribrackets",
    "TribracketBracket",
    "BracketAxiomReport",
    "NotConstantError",
    "derive_delta",
    "derive_w",
    "verify_bracket",
    "make_kauffman",
    "make_cocycle",
    "search_brackets",
    "PDCode",
    "LinkDiagram",
    "SmoothingState",
    "parse_pd",
    "build_diagram",
    "Coloring",
    "InvariantPolynomial",
    "enumerate_colorings",
    "counting_invariant",
    "beta",
    "phi",
    "phi_multiset",
    "catalog",
]
