"""Turn problem-file sections into differential values."""

from __future__ import annotations

import logging

from ..core.errors import ExprError, InvalidEquation, ProblemFileError
from ..core.models import ProblemFile
from ..expr.parser import parse_poly, parse_ratfunc
from .conversion import corresponding_parametrization
from .implicit import implicitize_curve
from .types import IOEquation, Parametrization, Realization

logger = logging.getLogger(__name__)


def _parse(problem: ProblemFile, where: str, parse, text: str):
    try:
        return parse(text)
    except ExprError as exc:
        raise ProblemFileError(f"{where}: {exc}", problem.path) from exc


def equation_of(problem: ProblemFile, *, check: bool = True) -> IOEquation:
    if problem.equation is None:
        raise ProblemFileError("missing [equation] section", problem.path)
    F = _parse(problem, "F", parse_poly, problem.equation)
    try:
        return IOEquation.from_poly(F, check=check)
    except InvalidEquation as exc:
        raise ProblemFileError(f"F: {exc}", problem.path) from None


def equation_for(problem: ProblemFile, sigma: Realization) -> tuple[IOEquation, bool]:
    """F from [equation], else by implicitizing a first-order ``sigma``.

    The flag is True when F was computed rather than read.
    """
    if problem.equation is not None:
        return equation_of(problem), False
    if sigma.order != 1:
        raise ProblemFileError("missing [equation] section", problem.path)
    logger.info("no [equation]; implicitizing the realization")
    return implicitize_curve(corresponding_parametrization(sigma)), True


def realization_of(problem: ProblemFile) -> Realization:
    section = problem.realization
    if section is None:
        raise ProblemFileError("missing [realization] section", problem.path)
    p = tuple(_parse(problem, key, parse_ratfunc, text) for key, text in section.ordered_states())
    q = _parse(problem, "y", parse_ratfunc, section.output)
    try:
        return Realization(p=p, q=q)
    except ValueError as exc:
        raise ProblemFileError(f"[realization]: {exc}", problem.path) from None


def parametrization_of(problem: ProblemFile) -> Parametrization:
    if problem.parametrization is None:
        raise ProblemFileError("missing [parametrization] section", problem.path)
    comps = tuple(
        _parse(problem, f"P{i}", parse_ratfunc, text)
        for i, text in enumerate(problem.parametrization)
    )
    try:
        return Parametrization(comps)
    except ValueError as exc:
        raise ProblemFileError(f"[parametrization]: {exc}", problem.path) from None
