"""Real realizations through the analytic split of a proper parametrization."""

from .algorithm import RealOutcome, apply_factor, is_real, real_realize
from .curves import CurveKind, RealCurveFactor, classify_factor, detect_real_curve_factors
from .split import AnalyticSplit, ComponentSplit, analytic_split, common_v, shift_to_plane

__all__ = [
    "RealOutcome",
    "apply_factor",
    "is_real",
    "real_realize",
    "CurveKind",
    "RealCurveFactor",
    "classify_factor",
    "detect_real_curve_factors",
    "AnalyticSplit",
    "ComponentSplit",
    "analytic_split",
    "common_v",
    "shift_to_plane",
]
