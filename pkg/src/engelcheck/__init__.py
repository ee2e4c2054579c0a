"""Exact verification of Engel identities in a finite-dimensional nilpotent algebra.

The typical flow: parse a presentation, build the quotient algebra, then run
Lie, group and BCH checks on it::

    from engelcheck import load_presentation, build_quotient, lie_engel_check
    alg = build_quotient(load_presentation(DEFAULT_SPEC))
    lie_engel_check(alg, 5).status   # 'pass'
"""

from .claims import DEFAULT_CATALOG, DEFAULT_SPEC
from .group import group_engel_check, group_nilpotency
from .lie import f_decomposition, lie_engel_check, lie_lower_central_series
from .parse import load_presentation, parse_poly, parse_presentation
from .quotient import build_quotient, normal_form
from .report import VerificationReport, render_report

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_CATALOG", "DEFAULT_SPEC", "build_quotient", "normal_form", "load_presentation",
    "parse_poly", "parse_presentation", "lie_engel_check", "lie_lower_central_series",
    "f_decomposition", "group_engel_check", "group_nilpotency", "VerificationReport", "render_report",
]
