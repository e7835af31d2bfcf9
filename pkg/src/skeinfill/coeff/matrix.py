"""Small dense matrices over a commutative ring, as lists of lists."""

from __future__ import annotations

from typing import Sequence

Matrix = list[list]


def check_square(mx: Sequence[Sequence]) -> int:
    n = len(mx)
    for row in mx:
        if len(row) != n:
            raise ValueError(f"matrix is not square: {n} rows but a row of length {len(row)}")
    return n


def identity(n: int, zero, one) -> Matrix:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix, zero) -> Matrix:
    if a and len(a[0]) != len(b):
        raise ValueError("dimension mismatch in matrix product")
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        new = []
        for j in range(cols):
            acc = zero
            for k, x in enumerate(row):
                if x:
                    y = b[k][j]
                    if y:
                        acc = acc + x * y
            new.append(acc)
        out.append(new)
    return out


def mat_vec(a: Matrix, v: Sequence, zero) -> list:
    if a and len(a[0]) != len(v):
        raise ValueError("dimension mismatch in matrix-vector product")
    out = []
    for row in a:
        acc = zero
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def poly_eval_matrix(p, mx: Matrix) -> Matrix:
    """Substitute a square matrix for the variable of ``p`` (Horner)."""
    n = check_square(mx)
    field = p.field
    zero, one = field.zero, field.one
    rows = [[field.coerce(x) for x in row] for row in mx]
    result = [[zero] * n for _ in range(n)]
    for c in reversed(p.c):
        result = mat_mul(result, rows, zero)
        if c:
            for i in range(n):
                result[i][i] = result[i][i] + c
    return result


def is_zero_matrix(mx: Matrix) -> bool:
    return all(not x for row in mx for x in row)


def bareiss_det(mx: Matrix, zero, one, exact_div) -> object:
    """Fraction-free determinant over an integral domain.

    ``exact_div(a, b)`` must return a / b when b divides a exactly.
    """
    n = check_square(mx)
    if n == 0:
        return one
    m = [list(row) for row in mx]
    sign = 1
    prev = one
    for k in range(n - 1):
        if not m[k][k]:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return zero
        piv = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                val = m[i][j] * piv - m[i][k] * m[k][j]
                m[i][j] = exact_div(val, prev) if val else zero
        prev = piv
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det
