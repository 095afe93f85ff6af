"""Small exact-arithmetic matrix toolkit.

Matrices are tuples of row tuples holding ints or Fractions.  Nothing here
is tuned for large dense inputs; the diagrams handled by the package have
at most a few dozen vertices.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .errors import SingularMatrix

Matrix = tuple  # tuple[tuple[int | Fraction, ...], ...]


def _norm(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    return v


def freeze(rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(_norm(v) for v in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def shape(m: Matrix) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def is_square(m: Matrix) -> bool:
    return all(len(row) == len(m) for row in m)


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def scale(k, m: Matrix) -> Matrix:
    return tuple(tuple(k * x for x in row) for row in m)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return freeze(
        [[sum(x * y for x, y in zip(row, col) if x and y) for col in bt] for row in a]
    )


def matvec(a: Matrix, v: Sequence) -> tuple:
    return tuple(_norm(sum(x * y for x, y in zip(row, v))) for row in a)


def vecmat(v: Sequence, a: Matrix) -> tuple:
    return matvec(transpose(a), v)


def matpow(m: Matrix, k: int) -> Matrix:
    """Exact power by repeated squaring."""
    if k < 0:
        raise ValueError("negative matrix power")
    result, base = identity(len(m)), m
    while k:
        if k & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        k >>= 1
    return result


def principal_minor(m: Matrix, drop: Sequence[int]) -> Matrix:
    keep = [i for i in range(len(m)) if i not in set(drop)]
    return tuple(tuple(m[i][j] for j in keep) for i in keep)


def submatrix(m: Matrix, keep: Sequence[int]) -> Matrix:
    return tuple(tuple(m[i][j] for j in keep) for i in keep)


def determinant(m: Matrix):
    """Bareiss fraction-free elimination (exact for integer input)."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = num // prev if isinstance(num, int) and isinstance(prev, int) else num / prev
        prev = a[k][k]
    return _norm(sign * a[n - 1][n - 1])


def rref(m: Matrix) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over the rationals and the pivot columns."""
    a = [[Fraction(v) for v in row] for row in m]
    rows, cols = shape(m)
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1]) if m else 0


def nullspace(m: Matrix) -> list[tuple]:
    """Basis of the right kernel ``{v : m v = 0}`` with rational entries."""
    red, pivots = rref(m)
    cols = shape(m)[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -red[r][f]
        basis.append(tuple(v))
    return basis


def solve(m: Matrix, b: Sequence) -> tuple:
    """Unique solution of ``m x = b`` over the rationals."""
    n = len(m)
    aug = tuple(tuple(row) + (b[i],) for i, row in enumerate(m))
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise SingularMatrix("coefficient matrix is singular")
    return tuple(_norm(red[i][n]) for i in range(n))


def primitive_integer_vector(v: Sequence) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers, first nonzero entry positive."""
    den = 1
    for x in v:
        den = math.lcm(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = math.gcd(g, x)
    if g == 0:
        return tuple(ints)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)
