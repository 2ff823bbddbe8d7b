"""Computational algebra over hyperfields.

Set-valued hyperaddition with exact region canonical forms, polynomials and
their roots, push-forwards along homomorphisms, and constructive lifting of
tropical roots to the tropical complex hyperfield.
"""

from .carriers import PHASE_ONE, PHASE_ZERO, Phase, Polar
from .catalog import (
    CTRIV,
    ETA,
    K,
    P,
    PH,
    QTRIV,
    S,
    SGN,
    T,
    TC,
    Homomorphism,
    catalog,
    hom_catalog,
    hom_check,
    hom_lookup,
    lookup,
    to_krasner,
)
from .axioms import check_axioms
from .polynomial import EvalResult, Polynomial, evaluate, pushforward, restrict_to_line
from .roots import (
    CertifyReport,
    RootReport,
    certify_root_tc,
    finite_roots,
    multiplicity,
    tropical_roots,
)
from .textio import format_polynomial, parse_element, parse_point, parse_polynomial
from .valueset import ValueSet

__all__ = [
    "CTRIV", "ETA", "K", "P", "PH", "PHASE_ONE", "PHASE_ZERO", "QTRIV", "S", "SGN", "T", "TC",
    "CertifyReport", "EvalResult", "Homomorphism", "Phase", "Polar", "Polynomial", "RootReport",
    "ValueSet", "catalog", "certify_root_tc", "check_axioms", "evaluate", "finite_roots",
    "format_polynomial", "hom_catalog", "hom_check", "hom_lookup", "lookup", "multiplicity",
    "parse_element", "parse_point", "parse_polynomial", "pushforward", "restrict_to_line",
    "to_krasner", "tropical_roots",
]

__version__ = "0.1.0"
