"""Small dense matrix helpers over either scalar backend.

Everything here operates on tuples-of-tuples (rows).  Matrices are at most
5x5, so plain loops are the right tool; exact ranks use fraction-free
(Bareiss) elimination so intermediate values stay integral when the input
is integral.
"""

from __future__ import annotations

from fractions import Fraction

Row = tuple
Matrix = tuple


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(1) if i == j else Fraction(0) for j in range(n))
                 for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0])
    return tuple(tuple(sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m))
                 for i in range(n))


def mat_vec(a: Matrix, v: Row) -> Row:
    return tuple(sum(a[i][j] * v[j] for j in range(len(v))) for i in range(len(a)))


def transpose(a: Matrix) -> Matrix:
    return tuple(tuple(a[i][j] for i in range(len(a))) for j in range(len(a[0])))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_pow(a: Matrix, e: int) -> Matrix:
    out = identity(len(a))
    for _ in range(e):
        out = mat_mul(out, a)
    return out


def det(a: Matrix):
    """Determinant by exact elimination (Fractions) or pivoted float elimination."""
    n = len(a)
    rows = [list(r) for r in a]
    exact = not any(isinstance(x, float) for r in rows for x in r)
    if exact:
        rows = [[Fraction(x) for x in r] for r in rows]
    sign = 1
    result = 1.0 if not exact else Fraction(1)
    for col in range(n):
        pivot = None
        if exact:
            for r in range(col, n):
                if rows[r][col] != 0:
                    pivot = r
                    break
        else:
            pivot = max(range(col, n), key=lambda r: abs(rows[r][col]))
            if rows[pivot][col] == 0:
                pivot = None
        if pivot is None:
            return result * 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            sign = -sign
        p = rows[col][col]
        result *= p
        for r in range(col + 1, n):
            factor = rows[r][col] / p
            for c in range(col, n):
                rows[r][c] -= factor * rows[col][c]
    return result * sign


def rank(a: Matrix, tol: float = 0.0) -> int:
    """Row rank.  Exact inputs use fraction-free (Bareiss) elimination;
    float inputs use partial pivoting with a relative tolerance."""
    rows = [list(r) for r in a]
    if not rows:
        return 0
    n, m = len(rows), len(rows[0])
    if any(isinstance(x, float) for r in rows for x in r):
        scale = max((abs(x) for r in rows for x in r), default=0.0)
        if scale == 0.0:
            return 0
        cutoff = tol * max(1.0, scale)
        r = 0
        for col in range(m):
            pivot = max(range(r, n), key=lambda i: abs(rows[i][col]), default=None)
            if pivot is None or abs(rows[pivot][col]) <= cutoff:
                continue
            rows[r], rows[pivot] = rows[pivot], rows[r]
            for i in range(r + 1, n):
                factor = rows[i][col] / rows[r][col]
                for c in range(col, m):
                    rows[i][c] -= factor * rows[r][c]
            r += 1
            if r == n:
                break
        return r
    # Bareiss: division-free apart from the exact previous pivot
    rows = [[Fraction(x) for x in r] for r in rows]
    prev = Fraction(1)
    r = 0
    for col in range(m):
        pivot = next((i for i in range(r, n) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(r + 1, n):
            for c in range(col + 1, m):
                rows[i][c] = (rows[r][col] * rows[i][c] - rows[i][col] * rows[r][c]) / prev
            rows[i][col] = Fraction(0)
        prev = rows[r][col]
        r += 1
        if r == n:
            break
    return r


def invert(a: Matrix) -> Matrix:
    """Exact inverse via Gauss-Jordan; inputs must be exact scalars."""
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
           for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)
