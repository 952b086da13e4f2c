"""Exact LP certificates, closed-form bounds and proof-inequality audits"""

from .analytic import (
    AveragingBound,
    analytic_upper_bounds,
    averaging_bound,
    random_lower_exponent,
    upper_hint,
)
from .audits import (
    AuditReport,
    TripleClassification,
    audit_five_three,
    audit_injection,
    audit_six_four,
    classify_triples,
)
from .programs import five_three_program, lp_five_three, lp_six_four, six_four_program
from .rational_lp import LPCertificate, RationalLP, solve_lp, verify_certificate

__all__ = [
    "AuditReport",
    "AveragingBound",
    "LPCertificate",
    "RationalLP",
    "TripleClassification",
    "analytic_upper_bounds",
    "audit_five_three",
    "audit_injection",
    "audit_six_four",
    "averaging_bound",
    "classify_triples",
    "five_three_program",
    "lp_five_three",
    "lp_six_four",
    "random_lower_exponent",
    "six_four_program",
    "solve_lp",
    "upper_hint",
    "verify_certificate",
]
