"""Realizability checks and exact verification."""

from __future__ import annotations

import logging

from ..core.models import CheckResult, Verdict
from ..kernel.ratfunc import vanishes_at
from ..kernel.ring import INPUT_VARS
from .conversion import corresponding_parametrization, jacobian
from .types import INPUT_DERIVATIVES, IOEquation, Parametrization, Realization

logger = logging.getLogger(__name__)


def check_order_obstruction(F: IOEquation) -> CheckResult:
    """NotRealizable when F involves a higher derivative of u than of y."""
    result = CheckResult(verdict=Verdict.INCONCLUSIVE)
    if F.order_u > F.order_y:
        result.verdict = Verdict.NOT_REALIZABLE
        result.add_failure(
            "ORDER_OBSTRUCTION",
            f"input order {F.order_u} exceeds output order {F.order_y}",
            location="F",
        )
    else:
        result.add_note(
            "ORDER_OBSTRUCTION",
            f"input order {F.order_u} <= output order {F.order_y}",
            location="F",
        )
    return result


def check_param_shape(P: Parametrization, order_u: int = 1) -> CheckResult:
    """Necessary shape conditions on a parametrization of a realizable F.

    With ``order_u == 0``: P0..P_{n-1} are u-free and Pn involves u but no
    derivative of it. With ``order_u == 1``: P0..P_{n-2} are u-free,
    P_{n-1} involves no derivative of u. In both cases
    ``d Pn/d u' = d P_{n-1}/d u``.
    """
    result = CheckResult()
    n = P.state_count
    if order_u > 1:
        result.add_failure(
            "INPUT_ORDER", f"input order {order_u} is not supported by the shape conditions"
        )
        return result

    free_upto = n if order_u == 0 else n - 1
    for i in range(free_upto):
        if P[i].depends_on(INPUT_VARS):
            result.add_failure("U_FREE", "must not involve u", location=f"P{i}")
    mid = n if order_u == 0 else n - 1
    if mid >= 0 and P[mid].depends_on(INPUT_DERIVATIVES):
        result.add_failure("U_ONLY", "must not involve derivatives of u", location=f"P{mid}")
    if n >= 1:
        lhs = P[n].derivative("u1")
        rhs = P[n - 1].derivative("u")
        if lhs != rhs:
            result.add_failure(
                "U_PRIME_MIXING",
                f"d/du' of P{n} differs from d/du of P{n - 1}",
                location=f"P{n}",
            )
    if result.passed:
        logger.debug("parametrization shape conditions hold (order_u=%d)", order_u)
    return result


def verify_realization(sigma: Realization, F: IOEquation) -> bool:
    """True iff F vanishes on the corresponding parametrization of ``sigma``."""
    if F.order_y < sigma.order:
        return False
    P = corresponding_parametrization(sigma, F.order_y)
    ok = vanishes_at(F.F, P.bindings())
    logger.debug("realization verification: %s", ok)
    return ok


def validate_parametrization(P: Parametrization, F: IOEquation) -> CheckResult:
    """Maximal Jacobian rank in the states and ``F(P) = 0``, both exact."""
    result = CheckResult()
    J = jacobian(P.components, P.states)
    rank = J.rank()
    if rank < len(P.states):
        result.add_failure("JACOBIAN_RANK", f"Jacobian rank {rank} < {len(P.states)}")
    if F.order_y != P.order:
        result.add_failure("ORDER", f"F has order {F.order_y}, P has {P.order + 1} components")
    elif not vanishes_at(F.F, P.bindings()):
        result.add_failure("F_OF_P", "F does not vanish on the parametrization")
    return result
