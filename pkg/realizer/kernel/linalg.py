"""Small exact linear algebra.

:class:`RFMatrix` does Gaussian elimination over the rational-function
field. Scalar systems over ``QQ_I`` go through sympy's ``DomainMatrix``.
"""

from __future__ import annotations

import logging
from typing import Sequence

from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from ..core.errors import SingularMatrixError
from .ratfunc import RatFunc

logger = logging.getLogger(__name__)


def _size(r: RatFunc) -> int:
    return len(r.num) + len(r.den)


class RFMatrix:
    """Rectangular matrix of :class:`RatFunc` entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        rows = [[RatFunc.of(e) for e in row] for row in entries]
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise ValueError("matrix rows have different lengths")
        self.entries = rows
        self.rows = len(rows)
        self.cols = widths.pop() if widths else 0

    @classmethod
    def identity(cls, n: int) -> "RFMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij: tuple[int, int]) -> RatFunc:
        i, j = ij
        return self.entries[i][j]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def apply(self, vec: Sequence) -> list[RatFunc]:
        """Matrix-vector product."""
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch")
        vec = [RatFunc.of(v) for v in vec]
        out = []
        for row in self.entries:
            acc = RatFunc.zero()
            for a, b in zip(row, vec):
                if not a.is_zero() and not b.is_zero():
                    acc = acc + a * b
            out.append(acc)
        return out

    def _echelon(self, augment: list[list[RatFunc]] | None = None):
        """Row-reduce a copy; returns (rows, pivot columns, sign of swaps)."""
        m = [list(r) + (list(augment[i]) if augment else []) for i, r in enumerate(self.entries)]
        pivots: list[int] = []
        sign = 1
        row = 0
        for col in range(self.cols):
            candidates = [i for i in range(row, self.rows) if not m[i][col].is_zero()]
            if not candidates:
                continue
            best = min(candidates, key=lambda i: _size(m[i][col]))
            if best != row:
                m[row], m[best] = m[best], m[row]
                sign = -sign
            inv = m[row][col].inverse()
            m[row] = [e * inv if not e.is_zero() else e for e in m[row]]
            for i in range(self.rows):
                if i == row or m[i][col].is_zero():
                    continue
                f = m[i][col]
                m[i] = [a - f * b if not b.is_zero() else a for a, b in zip(m[i], m[row])]
            pivots.append(col)
            row += 1
            if row == self.rows:
                break
        return m, pivots, sign

    def rank(self) -> int:
        return len(self._echelon()[1])

    def det(self) -> RatFunc:
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return RatFunc.one()
        if n == 1:
            return self.entries[0][0]
        if n == 2:
            (a, b), (c, d) = self.entries
            return a * d - b * c
        # fraction-carrying elimination: product of pivots before scaling
        m = [list(r) for r in self.entries]
        det = RatFunc.one()
        for col in range(n):
            candidates = [i for i in range(col, n) if not m[i][col].is_zero()]
            if not candidates:
                return RatFunc.zero()
            best = min(candidates, key=lambda i: _size(m[i][col]))
            if best != col:
                m[col], m[best] = m[best], m[col]
                det = -det
            piv = m[col][col]
            det = det * piv
            for i in range(col + 1, n):
                if m[i][col].is_zero():
                    continue
                f = m[i][col] / piv
                m[i] = [a - f * b for a, b in zip(m[i], m[col])]
        return det

    def solve(self, rhs: Sequence) -> list[RatFunc]:
        return solve_linear(self, rhs)

    def nullspace(self) -> list[list[RatFunc]]:
        """Basis of the right kernel, one vector per free column."""
        m, pivots, _ = self._echelon()
        free = [j for j in range(self.cols) if j not in pivots]
        basis = []
        for f in free:
            vec = [RatFunc.zero() for _ in range(self.cols)]
            vec[f] = RatFunc.one()
            for r, p in enumerate(pivots):
                vec[p] = -m[r][f]
            basis.append(vec)
        return basis


def solve_linear(matrix: RFMatrix, rhs: Sequence) -> list[RatFunc]:
    """Solve ``matrix * sol = rhs`` for a square nonsingular matrix."""
    if not matrix.is_square():
        raise ValueError("solve_linear needs a square matrix")
    if len(rhs) != matrix.rows:
        raise ValueError("right-hand side has the wrong length")
    n = matrix.rows
    if n == 1:
        a = matrix.entries[0][0]
        if a.is_zero():
            raise SingularMatrixError(rank=0)
        return [RatFunc.of(rhs[0]) / a]
    m, pivots, _ = matrix._echelon([[RatFunc.of(v)] for v in rhs])
    if len(pivots) < n:
        raise SingularMatrixError(rank=len(pivots))
    return [m[i][n] for i in range(n)]


def scalar_rref(rows: Sequence[Sequence]) -> tuple[list[list], tuple[int, ...]]:
    """Reduced row echelon form of a ``QQ_I`` matrix and its pivot columns."""
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return rows, ()
    dm = DomainMatrix(rows, (len(rows), len(rows[0])), QQ_I)
    reduced, pivots = dm.rref(method="GJ")
    return reduced.to_list(), tuple(pivots)
