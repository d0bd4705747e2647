"""Properness analysis and observable realizations of first-order systems."""

from .algorithm import ObservableOutcome, observable_realize, observable_realize_detailed
from .gpair import (
    GPair,
    degree_condition_check,
    fiber_polynomial,
    gp_pair,
    is_proper,
    tracing_index,
)
from .reparam import implicit_equation, implicit_equations, proper_reparametrize
from .search import ReparamCandidate, Witness, find_common_reparametrization, probe_points

__all__ = [
    "ObservableOutcome",
    "observable_realize",
    "observable_realize_detailed",
    "GPair",
    "degree_condition_check",
    "fiber_polynomial",
    "gp_pair",
    "is_proper",
    "tracing_index",
    "implicit_equation",
    "implicit_equations",
    "proper_reparametrize",
    "ReparamCandidate",
    "Witness",
    "find_common_reparametrization",
    "probe_points",
]
