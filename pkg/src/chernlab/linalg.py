"""Dense exact linear algebra: row reduction over F_p and fraction-free
integer elimination for the rational fitting step."""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "SingularSystemError",
    "rref_mod_p",
    "RowSpan",
    "mat_mul",
    "mat_vec",
    "solve_fraction_free",
]


class SingularSystemError(ValueError):
    """Raised when an exact linear solve meets a singular matrix."""


def rref_mod_p(rows, p):
    """Reduced row echelon form over F_p.

    Pivots are chosen on the first available column, left to right, so the
    result is deterministic.  Returns (rref_rows, pivot_columns) with zero
    rows dropped.
    """
    rows = [list(row) for row in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    rank = 0
    for col in range(ncols):
        sel = None
        for i in range(rank, len(rows)):
            if rows[i][col] % p:
                sel = i
                break
        if sel is None:
            continue
        rows[rank], rows[sel] = rows[sel], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [v * inv % p for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] % p:
                factor = rows[i][col] % p
                rows[i] = [(a - factor * b) % p
                           for a, b in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
    return rows[:rank], pivots


class RowSpan:
    """Incrementally maintained row space over F_p (echelon form)."""

    def __init__(self, p):
        self.p = p
        self.rows = []
        self.pivots = []

    def add(self, vector) -> bool:
        """Reduce vector against the span; absorb it if independent.

        Returns True when the vector enlarged the span.
        """
        p = self.p
        v = [x % p for x in vector]
        for row, piv in zip(self.rows, self.pivots):
            c = v[piv]
            if c:
                v = [(a - c * b) % p for a, b in zip(v, row)]
        piv = next((i for i, x in enumerate(v) if x), None)
        if piv is None:
            return False
        inv = pow(v[piv], -1, p)
        v = [x * inv % p for x in v]
        self.rows.append(v)
        self.pivots.append(piv)
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)


def mat_mul(a, b, p):
    """Matrix product over F_p; a is m x k, b is k x n (lists of rows)."""
    if not a:
        return []
    k = len(a[0])
    if k != len(b):
        raise ValueError("matrix dimensions do not match")
    n = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * n
        for x, brow in zip(row, b):
            if x:
                for j in range(n):
                    acc[j] += x * brow[j]
        out.append([v % p for v in acc])
    return out


def mat_vec(a, v, p):
    """Matrix-vector product over F_p."""
    return [sum(x * y for x, y in zip(row, v)) % p for row in a]


def solve_fraction_free(matrix, rhs):
    """Solve the square system A x = b exactly over the rationals.

    Forward elimination is fraction-free (Bareiss): every division is exact
    integer division, so intermediate entries stay integral.  Back
    substitution returns Fractions.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix) or len(rhs) != n:
        raise ValueError("system is not square")
    a = [list(row) + [b] for row, b in zip(matrix, rhs)]
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            sel = next((i for i in range(k + 1, n) if a[i][k]), None)
            if sel is None:
                raise SingularSystemError("singular matrix in exact solve")
            a[k], a[sel] = a[sel], a[k]
        for i in range(k + 1, n):
            for j in range(k + 1, n + 1):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    if a[n - 1][n - 1] == 0:
        raise SingularSystemError("singular matrix in exact solve")
    sol = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(a[i][n])
        for j in range(i + 1, n):
            acc -= a[i][j] * sol[j]
        sol[i] = acc / a[i][i]
    return sol
