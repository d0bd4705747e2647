"""Canonical text form of polynomials and rational functions.

Output uses the same grammar :mod:`realizer.expr.parser` reads, so
``parse_expr(print_expr(v)) == v`` for every value. Terms are listed in
descending graded lexicographic order.
"""

from __future__ import annotations

from ..kernel.ratfunc import RatFunc
from ..kernel.ring import VARIABLES, Poly

DISPLAY_NAMES: dict[str, str] = {
    "u": "u",
    "u1": "u'",
    "u2": "u''",
    "u3": "u'''",
    "y0": "y",
    "y1": "y'",
    "y2": "y''",
    "y3": "y'''",
}


def display_name(variable: str) -> str:
    return DISPLAY_NAMES.get(variable, variable)


def _rational(q) -> str:
    num, den = int(q.numerator), int(q.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def _monomial(monom: tuple[int, ...]) -> str:
    parts = []
    for i, e in enumerate(monom):
        if not e:
            continue
        name = display_name(VARIABLES[i])
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def _scalar(c) -> str:
    """A Gaussian rational on its own, e.g. ``3/2``, ``-I``, ``1 + 2*I``."""
    re, im = c.x, c.y
    if not im:
        return _rational(re)
    if im == 1:
        imag = "I"
    elif im == -1:
        imag = "-I"
    else:
        imag = f"{_rational(im)}*I"
    if not re:
        return imag
    if imag.startswith("-"):
        return f"{_rational(re)} - {imag[1:]}"
    return f"{_rational(re)} + {imag}"


def _term(coeff, monom: tuple[int, ...]) -> tuple[bool, str]:
    """Return (negative, unsigned text) for one term."""
    mono = _monomial(monom)
    re, im = coeff.x, coeff.y
    if re and im:
        text = f"({_scalar(coeff)})"
        return False, f"{text}*{mono}" if mono else text
    value = re if re else im
    negative = value < 0
    mag = -value if negative else value
    if im:
        c = "I" if mag == 1 else f"{_rational(mag)}*I"
    else:
        c = "" if mag == 1 and mono else _rational(mag)
    if not mono:
        return negative, c
    return negative, f"{c}*{mono}" if c else mono


def print_poly(p: Poly) -> str:
    if not p:
        return "0"
    out = []
    for k, (monom, coeff) in enumerate(p.terms()):
        negative, text = _term(coeff, monom)
        if k == 0:
            out.append(f"-{text}" if negative else text)
        else:
            out.append(f" - {text}" if negative else f" + {text}")
    return "".join(out)


def _is_atom(p: Poly) -> bool:
    """A bare positive integer, or one variable power with coefficient 1."""
    if len(p) != 1:
        return False
    monom, coeff = p.terms()[0]
    if coeff.y:
        return False
    if p.is_ground:
        return coeff.x > 0 and coeff.x.denominator == 1
    return coeff.x == 1 and sum(1 for e in monom if e) == 1


def print_expr(value) -> str:
    """Deterministic text for a Poly or RatFunc."""
    if isinstance(value, RatFunc):
        if value.is_poly():
            return print_poly(value.num)
        num = print_poly(value.num)
        if len(value.num) > 1:
            num = f"({num})"
        den = print_poly(value.den)
        if not _is_atom(value.den):
            den = f"({den})"
        return f"{num}/{den}"
    return print_poly(value)


def print_equation(lhs: str, value) -> str:
    """``lhs = expr`` line, as used in reports and problem files."""
    return f"{lhs} = {print_expr(value)}"
