"""Conversions between realizations and parametrizations.

A realization ``x' = p, y = q`` gives the parametrization
``(q, L q, ..., L^n q)`` of iterated Lie derivatives. Conversely a
parametrization yields ``x' = z`` with ``z`` the solution of
``J(P0..P_{n-1}) z = (P1 - D_u P0, ..., Pn - D_u P_{n-1})``; this is a
realization exactly when ``z`` is free of the derivatives of u.
"""

from __future__ import annotations

import logging
from typing import Sequence

from ..core.errors import (
    NotRealizableFromP,
    SingularJacobian,
    SingularMatrixError,
    SingularReparametrization,
)
from ..kernel.linalg import RFMatrix, solve_linear
from ..kernel.ratfunc import RatFunc
from ..kernel.ring import INPUT_VARS
from .operators import d_u, lie_derivative
from .types import INPUT_DERIVATIVES, Parametrization, Realization

logger = logging.getLogger(__name__)


def jacobian(values: Sequence[RatFunc], states: Sequence[str]) -> RFMatrix:
    """Rows are gradients of ``values`` with respect to ``states``."""
    return RFMatrix([[RatFunc.of(v).derivative(s) for s in states] for v in values])


def corresponding_parametrization(sigma: Realization, n: int | None = None) -> Parametrization:
    """``(q, L_p q, ..., L_p^n q)``; ``n`` defaults to the system order."""
    n = sigma.order if n is None else n
    if n < sigma.order:
        raise ValueError("need at least one component per state plus the output")
    comps = [sigma.q]
    for _ in range(n):
        comps.append(lie_derivative(comps[-1], sigma.p, sigma.states))
    levels = tuple(range(n + 1))
    logger.debug("corresponding parametrization of order %d", n)
    return Parametrization(tuple(comps), levels=levels, state_count=sigma.order)


def realization_from_parametrization(P: Parametrization) -> Realization:
    """Realization ``x' = z, y = P0`` from a parametrization.

    Raises:
        SingularJacobian: the gradients of P0..P_{n-1} are dependent
        NotRealizableFromP: ``z`` involves u', u'', ...
    """
    n = P.state_count
    states = P.states
    J = jacobian(P.components[:n], states)
    rhs = [P[i + 1] - d_u(P[i]) for i in range(n)]
    try:
        z = solve_linear(J, rhs)
    except SingularMatrixError:
        raise SingularJacobian() from None
    if any(zi.depends_on(INPUT_DERIVATIVES) for zi in z):
        logger.info("Jacobian formula depends on derivatives of u")
        raise NotRealizableFromP(tuple(z))
    return Realization(p=tuple(z), q=P[0])


def reparametrize_realization(sigma: Realization, s: Sequence[RatFunc]) -> Realization:
    """Change of states ``x = s(x~)``: ``x~' = J(s)^-1 p(u, s)``, ``y = q(u, s)``."""
    s = [RatFunc.of(v) for v in s]
    states = sigma.states
    if len(s) != len(states):
        raise SingularReparametrization("one component of s per state is required")
    for v in s:
        if v.depends_on(INPUT_VARS):
            raise SingularReparametrization("reparametrization must not depend on u")
        if v.names() - set(states):
            raise SingularReparametrization("reparametrization must be in the states only")
    bindings = dict(zip(states, s))
    p_s = [pi.substitute(bindings) for pi in sigma.p]
    q_s = sigma.q.substitute(bindings)
    try:
        p_new = solve_linear(jacobian(s, states), p_s)
    except SingularMatrixError:
        raise SingularReparametrization("Jacobian of the reparametrization is singular") from None
    return Realization(p=tuple(p_new), q=q_s)
