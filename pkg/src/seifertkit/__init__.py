"""Knot invariants of braid closures and PD diagrams, framed bands, and Hopf-fibration sampling."""

from .braid import BraidWord, fibrability_report, parse_braid, torus_braid
from .diagram import LinkDiagram, closure_to_diagram, canonical_code, reidemeister_rewrite
from .invariants import CONWAY, HOMFLY, JONES, kauffman_bracket_jones, skein_evaluate, specialize_homfly
from .laurent import LaurentPoly, normalize_units, parse_poly
from .seifert import alexander_from_burau, alexander_from_seifert, seifert_matrix_from_braid

__all__ = [
    "BraidWord",
    "parse_braid",
    "torus_braid",
    "fibrability_report",
    "LinkDiagram",
    "closure_to_diagram",
    "canonical_code",
    "reidemeister_rewrite",
    "LaurentPoly",
    "parse_poly",
    "normalize_units",
    "alexander_from_burau",
    "alexander_from_seifert",
    "seifert_matrix_from_braid",
    "skein_evaluate",
    "kauffman_bracket_jones",
    "specialize_homfly",
    "CONWAY",
    "JONES",
    "HOMFLY",
]
