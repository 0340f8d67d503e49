"""Exact singularity analysis of parameterized plane rational curves.

Quick start::

    from ratcurve import analyze_curve

    report = analyze_curve("s^4", "-s^3*t + s*t^3", "t^4", mode="classify")
    for point in report["points"]:
        print(point["a_type"], point["point"])
"""

from .binary_forms import BinaryForm, binary_gcd, squarefree_decomposition
from .curves import CurveError, CurveParam, validate_proper
from .parser import NotHomogeneous, SyntaxError, parse_curve, parse_form
from .pipeline import (
    AnalysisOptions,
    CurveAnalysis,
    CuspidalSummary,
    DivisorOrbit,
    InternalInconsistency,
    SingularPoint,
)
from .report import build_document, render, resolve_modes

__version__ = "0.1.0"

__all__ = [
    "AnalysisOptions",
    "BinaryForm",
    "CurveAnalysis",
    "CurveError",
    "CurveParam",
    "CuspidalSummary",
    "DivisorOrbit",
    "InternalInconsistency",
    "NotHomogeneous",
    "SingularPoint",
    "SyntaxError",
    "analyze_curve",
    "binary_gcd",
    "build_document",
    "parse_curve",
    "parse_form",
    "render",
    "resolve_modes",
    "squarefree_decomposition",
    "validate_proper",
    "__version__",
]


def analyze_curve(fx: str, fy: str, fz: str, mode: str = "all", **options) -> dict:
    """Parse three coordinate expressions and return the report document."""
    curve = parse_curve(fx, fy, fz)
    return build_document(
        curve, resolve_modes(mode), AnalysisOptions(**options)
    )
