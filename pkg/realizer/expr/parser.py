"""Expression parsing for differential polynomials and rational functions.

Source text is translated to a Python expression (primes become indexed
names, ``^`` becomes ``**``) and evaluated by a restricted AST walker that
only knows the ring operations. Anything else is a syntax error reported
at its position in the original text.
"""

from __future__ import annotations

import ast
import logging
import re

from ..core.errors import ExprSyntaxError, UnknownIdentifierError
from ..kernel.ratfunc import RatFunc
from ..kernel.ring import Poly, const, gen

logger = logging.getLogger(__name__)

MAX_DERIVATIVE = 3

# identifiers that take no primes, mapped to universe variables
PLAIN_IDENTIFIERS: dict[str, str] = {
    "x": "x",
    "x1": "x1",
    "x2": "x2",
    "z": "z",
    "w": "w",
    "t": "t",
    "z1": "z1",
    "z2": "z2",
}
DIFFERENTIAL_IDENTIFIERS = ("u", "y")

_TOKEN = re.compile(
    r"(?P<space>\s+)"
    r"|(?P<ident>[A-Za-z][A-Za-z0-9]*)(?P<primes>'*)"
    r"|(?P<number>[0-9]+)"
    r"|(?P<power>\^)"
    r"|(?P<op>[-+*/()])"
)


def universe_name(identifier: str, primes: int) -> str:
    """Universe variable for a source identifier with ``primes`` derivatives."""
    if identifier == "u":
        return "u" if primes == 0 else f"u{primes}"
    return f"y{primes}"


def _translate(src: str) -> tuple[str, list[int]]:
    """Rewrite source text to Python; also return original positions per char."""
    out: list[str] = []
    origin: list[int] = []

    def emit(text: str, pos: int) -> None:
        out.append(text)
        origin.extend([pos] * len(text))

    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            raise ExprSyntaxError(f"unexpected character {src[pos]!r}", pos, src)
        kind = next(k for k in ("space", "ident", "number", "power", "op") if m.group(k))
        if kind == "ident":
            name, primes = m.group("ident"), len(m.group("primes"))
            nxt = m.end()
            if primes and nxt < len(src) and (src[nxt].isalnum() or src[nxt] == "("):
                raise ExprSyntaxError("implicit multiplication is not allowed", nxt, src)
            if name in DIFFERENTIAL_IDENTIFIERS:
                if primes > MAX_DERIVATIVE:
                    raise ExprSyntaxError(
                        f"derivative order {primes} exceeds {MAX_DERIVATIVE}", pos, src
                    )
                emit(universe_name(name, primes), pos)
            elif name == "I" or name in PLAIN_IDENTIFIERS:
                if primes:
                    raise ExprSyntaxError(
                        f"only u and y carry derivatives, not {name!r}", pos, src
                    )
                emit(name, pos)
            else:
                raise UnknownIdentifierError(name, pos, src)
        elif kind == "number":
            nxt = m.end()
            if nxt < len(src) and (src[nxt].isalpha() or src[nxt] == "("):
                raise ExprSyntaxError("implicit multiplication is not allowed", nxt, src)
            emit(str(int(m.group("number"))), pos)
        elif kind == "power":
            emit("**", pos)
        elif kind == "op":
            if m.group("op") == "*" and src.startswith("**", pos):
                raise ExprSyntaxError("use ^ for powers", pos, src)
            emit(m.group("op"), pos)
        else:
            emit(" ", pos)
        pos = m.end()
    return "".join(out), origin


class _Evaluator:
    """Walks a restricted Python AST and builds a Poly or RatFunc."""

    def __init__(self, src: str, origin: list[int]):
        self.src = src
        self.origin = origin

    def _pos(self, node: ast.AST) -> int:
        col = getattr(node, "col_offset", 0)
        if col < len(self.origin):
            return self.origin[col]
        return len(self.src)

    def fail(self, message: str, node: ast.AST) -> ExprSyntaxError:
        return ExprSyntaxError(message, self._pos(node), self.src)

    def eval(self, node: ast.AST):
        if isinstance(node, ast.Expression):
            return self.eval(node.body)

        if isinstance(node, ast.Constant):
            if isinstance(node.value, bool) or not isinstance(node.value, int):
                raise self.fail("only integer literals are allowed", node)
            return const(node.value)

        if isinstance(node, ast.Name):
            if node.id == "I":
                return const(0, 1)
            return gen(self._variable(node))

        if isinstance(node, ast.UnaryOp):
            operand = self.eval(node.operand)
            if isinstance(node.op, ast.USub):
                return -operand
            if isinstance(node.op, ast.UAdd):
                return operand
            raise self.fail("unsupported unary operator", node)

        if isinstance(node, ast.BinOp):
            return self._binop(node)

        if isinstance(node, ast.Call):
            raise self.fail("implicit multiplication is not allowed", node)

        raise self.fail(f"unsupported expression element {type(node).__name__}", node)

    def _variable(self, node: ast.Name) -> str:
        name = node.id
        if name in PLAIN_IDENTIFIERS:
            return PLAIN_IDENTIFIERS[name]
        if re.fullmatch(r"u[1-3]?|y[0-3]", name):
            return name
        raise UnknownIdentifierError(name, self._pos(node), self.src)

    def _exponent(self, node: ast.AST) -> int:
        sign = 1
        while isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            if isinstance(node.op, ast.USub):
                sign = -sign
            node = node.operand
        if (
            isinstance(node, ast.Constant)
            and isinstance(node.value, int)
            and not isinstance(node.value, bool)
        ):
            return sign * node.value
        raise self.fail("exponent must be an integer literal", node)

    def _binop(self, node: ast.BinOp):
        if isinstance(node.op, ast.Pow):
            base = self.eval(node.left)
            k = self._exponent(node.right)
            if k < 0:
                if not base:
                    raise self.fail("division by zero", node)
                return RatFunc.of(base) ** k
            return base**k

        left = self.eval(node.left)
        right = self.eval(node.right)
        if isinstance(node.op, ast.Add):
            return _lift(left, right, lambda a, b: a + b)
        if isinstance(node.op, ast.Sub):
            return _lift(left, right, lambda a, b: a - b)
        if isinstance(node.op, ast.Mult):
            return _lift(left, right, lambda a, b: a * b)
        if isinstance(node.op, ast.Div):
            if isinstance(right, Poly) and not right:
                raise self.fail("division by zero", node)
            if isinstance(right, RatFunc) and right.is_zero():
                raise self.fail("division by zero", node)
            if isinstance(left, Poly) and isinstance(right, Poly) and right.is_ground:
                return left.quo_ground(right.LC)
            return RatFunc.of(left) / RatFunc.of(right)
        raise self.fail(f"operator {type(node.op).__name__} is not allowed", node)


def _lift(a, b, op):
    if isinstance(a, Poly) and isinstance(b, Poly):
        return op(a, b)
    return op(RatFunc.of(a), RatFunc.of(b))


def parse_expr(src: str) -> Poly | RatFunc:
    """Parse expression text to a Poly (no division left) or a reduced RatFunc.

    Raises:
        ExprSyntaxError: malformed text, with the offending position
        UnknownIdentifierError: an identifier outside the variable set
    """
    if not src.strip():
        raise ExprSyntaxError("empty expression", 0, src)
    text, origin = _translate(src)
    lead = len(text) - len(text.lstrip())
    text, origin = text[lead:], origin[lead:]
    try:
        tree = ast.parse(text, mode="eval")
    except SyntaxError as exc:
        col = max((exc.offset or 1) - 1, 0)
        pos = origin[col] if col < len(origin) else len(src)
        raise ExprSyntaxError(exc.msg or "invalid syntax", pos, src) from None
    value = _Evaluator(src, origin).eval(tree)
    if isinstance(value, RatFunc) and value.is_poly():
        return value.num
    return value


def parse_ratfunc(src: str) -> RatFunc:
    """Parse and always return a :class:`RatFunc`."""
    return RatFunc.of(parse_expr(src))


def parse_poly(src: str) -> Poly:
    """Parse text that must denote a polynomial."""
    value = parse_expr(src)
    if isinstance(value, RatFunc):
        raise ExprSyntaxError("expected a polynomial, got a quotient", 0, src)
    return value


__all__ = ["parse_expr", "parse_ratfunc", "parse_poly", "universe_name"]
