"""Sylvester matrices and exact resultants by two independent algorithms.

The resultant of monic f (degree k) and g (degree l) is the determinant of
the (k+l)-square Sylvester matrix whose first l rows carry the coefficients
of f and last k rows those of g, each block shifted right one column per
row.  ``resultant`` evaluates that determinant with fraction-free Bareiss
elimination; ``resultant_prs`` recomputes it with the subresultant
polynomial remainder sequence, giving a structurally independent value to
cross-check against.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from .errors import InputError, InvariantBreach
from .poly import IntPoly

__all__ = [
    "IntMatrix",
    "sylvester_matrix",
    "det_bareiss",
    "resultant",
    "resultant_prs",
]


@dataclass(frozen=True)
class IntMatrix:
    """Dense rectangular integer matrix; entries are row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise InputError("matrix dimensions must be positive")
        entries = tuple(int(v) for v in self.entries)
        if len(entries) != self.rows * self.cols:
            raise InputError(
                f"expected {self.rows * self.cols} entries, got {len(entries)}"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> IntMatrix:
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise InputError("matrix needs at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise InputError("rows have unequal lengths")
        flat = tuple(v for r in rows for v in r)
        return cls(len(rows), width, flat)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c : (i + 1) * c]) for i in range(self.rows)]

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise InputError("matrix shapes do not allow multiplication")
        a, b = self.to_rows(), other.to_rows()
        cols = other.cols
        out = []
        for row in a:
            out.append(
                [sum(row[k] * b[k][j] for k in range(self.cols)) for j in range(cols)]
            )
        return IntMatrix.from_rows(out)

    def __str__(self) -> str:
        rows = self.to_rows()
        width = max((len(str(v)) for v in self.entries), default=1)
        return "\n".join(" ".join(f"{v:>{width}}" for v in row) for row in rows)


def sylvester_matrix(f: IntPoly, g: IntPoly) -> IntMatrix:
    """The (k+l)-square Sylvester matrix: l shifted rows of f, then k of g."""
    k, l = f.degree, g.degree
    if k < 1 or l < 1:
        raise InputError("sylvester matrix needs both degrees >= 1")
    n = k + l
    rows = []
    for i in range(l):
        rows.append([0] * i + list(f.coeffs) + [0] * (n - k - 1 - i))
    for j in range(k):
        rows.append([0] * j + list(g.coeffs) + [0] * (n - l - 1 - j))
    return IntMatrix.from_rows(rows)


def det_bareiss(matrix: IntMatrix) -> int:
    """Exact determinant by fraction-free Bareiss elimination.

    Pivots are the first nonzero entry down the current column; a fully zero
    column is swapped with a later nonzero one (sign flip), after which the
    elimination runs to completion and yields 0.
    """
    if matrix.rows != matrix.cols:
        raise InputError("determinant needs a square matrix")
    n = matrix.rows
    a = matrix.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        pivot_row = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot_row is None:
            pivot_col = next(
                (j for j in range(k + 1, n) if any(a[i][j] for i in range(k, n))),
                None,
            )
            if pivot_col is None:
                return 0
            for row in a:
                row[k], row[pivot_col] = row[pivot_col], row[k]
            sign = -sign
            pivot_row = next(i for i in range(k, n) if a[i][k] != 0)
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        pk = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = _exact_div(row_i[j] * pk - aik * row_k[j], prev)
            row_i[k] = 0
        prev = pk
    return sign * a[n - 1][n - 1]


def resultant(f: IntPoly, g: IntPoly, *, verify: bool = False) -> int:
    """Resultant as the Bareiss determinant of the Sylvester matrix.

    With ``verify=True`` the subresultant-PRS value is computed as well and
    a mismatch raises InvariantBreach (it would indicate a bug).
    """
    value = det_bareiss(sylvester_matrix(f, g))
    if verify:
        other = resultant_prs(f, g)
        if other != value:
            raise InvariantBreach(
                f"resultant mismatch: bareiss gives {value}, prs gives {other}"
            )
    return value


def resultant_prs(f: IntPoly, g: IntPoly) -> int:
    """Resultant by the subresultant polynomial remainder sequence."""
    if f.degree < 1 or g.degree < 1:
        raise InputError("resultant needs both degrees >= 1")
    return _subresultant_resultant(list(f.coeffs), list(g.coeffs))


def _subresultant_resultant(a: list[int], b: list[int]) -> int:
    # Coefficient lists leading-first, both of degree >= 1.
    s = 1
    if len(a) < len(b):
        a, b = b, a
        if (len(a) - 1) % 2 == 1 and (len(b) - 1) % 2 == 1:
            s = -s
    cont_a = _content(a)
    cont_b = _content(b)
    a = [c // cont_a for c in a]
    b = [c // cont_b for c in b]
    t = cont_a ** (len(b) - 1) * cont_b ** (len(a) - 1)
    g = h = 1
    while len(b) - 1 > 0:
        deg_a, deg_b = len(a) - 1, len(b) - 1
        delta = deg_a - deg_b
        if deg_a % 2 == 1 and deg_b % 2 == 1:
            s = -s
        rem = _pseudo_rem(a, b)
        if not rem:
            return 0
        divisor = g * h**delta
        a, b = b, [_exact_div(c, divisor) for c in rem]
        g = a[0]
        if delta > 0:
            h = _exact_div(g**delta, h ** (delta - 1))
    deg_a = len(a) - 1
    return s * t * _exact_div(b[0] ** deg_a, h ** (deg_a - 1))


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    # prem(a, b): the remainder of lc(b)**(deg a - deg b + 1) * a modulo b.
    deg_b = len(b) - 1
    lead = b[0]
    rem = list(a)
    steps = len(a) - len(b) + 1
    while rem and len(rem) - 1 >= deg_b:
        top = rem[0]
        rem = [lead * c for c in rem[1:]]
        for k in range(1, len(b)):
            rem[k - 1] -= top * b[k]
        while rem and rem[0] == 0:
            rem.pop(0)
        steps -= 1
    if steps > 0 and rem:
        scale = lead**steps
        rem = [c * scale for c in rem]
    return rem


def _content(coeffs: list[int]) -> int:
    return reduce(math.gcd, coeffs, 0)


def _exact_div(numerator: int, denominator: int) -> int:
    q, r = divmod(numerator, denominator)
    if r:
        raise InvariantBreach(
            f"inexact division {numerator} / {denominator} in an exact algorithm"
        )
    return q
