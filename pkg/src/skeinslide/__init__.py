"""Skein relations from 2-handle slides in Temperley-Lieb boxes.

Exact Laurent-polynomial coefficients, Temperley-Lieb diagram algebra,
handle-slide relations, gluing into punctured discs and span membership
over ``Q(A)`` and ``Z[A^{+-1}]``.
"""

from .coeff import A, DELTA, ONE, ZERO, LaurentPoly, RationalFn, principal_membership
from .expr import ParseError, parse_expr, parse_laurent, print_element
from .relmod import (
    Certificate,
    RelationMatrix,
    conjecture_evidence,
    ideal_generators,
    span_membership,
    submodule_compare,
    z_span_decision,
)
from .sliding import (
    ALL_VARIANTS,
    LOWER_NEG,
    LOWER_POS,
    UPPER_NEG,
    UPPER_POS,
    SlideVariant,
    phi,
    relation_set,
    slide_relation,
    u_id,
    w_id,
)
from .surface import Multicurve, Scenario, ScenarioError, SkeinVector, glue, load_scenario, print_multicurve, rho_star
from .tl import TLDiagram, TLElement, compose, enumerate_basis, flip_sigma, identity, mirror_bar, tensor

__version__ = "0.1.0"

__all__ = [
    "A",
    "DELTA",
    "ONE",
    "ZERO",
    "LaurentPoly",
    "RationalFn",
    "principal_membership",
    "ParseError",
    "parse_expr",
    "parse_laurent",
    "print_element",
    "Certificate",
    "RelationMatrix",
    "conjecture_evidence",
    "ideal_generators",
    "span_membership",
    "submodule_compare",
    "z_span_decision",
    "ALL_VARIANTS",
    "LOWER_NEG",
    "LOWER_POS",
    "UPPER_NEG",
    "UPPER_POS",
    "SlideVariant",
    "phi",
    "relation_set",
    "slide_relation",
    "u_id",
    "w_id",
    "Multicurve",
    "Scenario",
    "ScenarioError",
    "SkeinVector",
    "glue",
    "load_scenario",
    "print_multicurve",
    "rho_star",
    "TLDiagram",
    "TLElement",
    "compose",
    "enumerate_basis",
    "flip_sigma",
    "identity",
    "mirror_bar",
    "tensor",
]
