"""Small dense matrices over the one-variable Laurent ring."""

from __future__ import annotations

from .laurent import LaurentPoly

Matrix = list[list[LaurentPoly]]


def identity(n: int, var: str = "t") -> Matrix:
    one = LaurentPoly.constant(1, (var,))
    zero = LaurentPoly({}, (var,))
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n, m, p = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = a[i][0] * b[0][j]
            for k in range(1, m):
                if a[i][k] and b[k][j]:
                    acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def det(m: Matrix, var: str = "t") -> LaurentPoly:
    """Fraction-free (Bareiss) determinant; exact because every division is exact."""
    n = len(m)
    if n == 0:
        return LaurentPoly.constant(1, (var,))
    a = [list(row) for row in m]
    sign = 1
    prev = LaurentPoly.constant(1, a[0][0].variables)
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly({}, a[0][0].variables)
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]).exact_div(prev)
        prev = pivot
    return a[n - 1][n - 1] * sign


def from_ints(rows: list[list[int]], var: str = "t") -> Matrix:
    return [[LaurentPoly.constant(x, (var,)) for x in row] for row in rows]
