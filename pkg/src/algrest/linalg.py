"""Dense exact linear algebra over the rationals.

Matrices are plain lists of lists of ``Fraction``.  Everything here is
Gauss-Jordan with leftmost pivoting, which keeps all derived objects
(ranks, solution vectors, kernel bases) canonical: the same input always
produces the same output, with no floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction

Vector = list[Fraction]
Matrix = list[Vector]


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def zero_vector(n: int) -> Vector:
    return [Fraction(0)] * n


def rref(rows: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot column indices (non-destructive)."""
    m = [[frac(x) for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Matrix) -> int:
    return len(rref(rows)[0])


def in_row_space(rows: Matrix, vec: Vector) -> bool:
    if all(x == 0 for x in vec):
        return True
    if not rows:
        return False
    return rank(rows) == rank(rows + [list(vec)])


def reduce_mod_rows(echelon: Matrix, pivots: list[int], vec: Vector) -> Vector:
    """Subtract the row-space component of ``vec`` (rows must be in rref)."""
    v = [frac(x) for x in vec]
    for row, c in zip(echelon, pivots):
        if v[c] != 0:
            f = v[c]
            v = [a - f * b for a, b in zip(v, row)]
    return v


def solve(rows: Matrix, rhs: Vector) -> Vector | None:
    """One solution of ``rows @ x = rhs`` with free variables set to 0.

    Returns None when the system is inconsistent.  The pivot choice makes
    the returned solution canonical.
    """
    if not rows:
        return None
    ncols = len(rows[0])
    aug = [list(row) + [frac(b)] for row, b in zip(rows, rhs)]
    ech, pivots = rref(aug)
    sol = zero_vector(ncols)
    for row, c in zip(ech, pivots):
        if c == ncols:
            return None
        sol[c] = row[ncols]
    return sol


def nullspace(rows: Matrix, ncols: int) -> Matrix:
    """Canonical kernel basis of the linear map given by ``rows``.

    Each basis vector has a 1 in one free column and the back-substituted
    pivot entries elsewhere (the usual rref kernel basis).
    """
    ech, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis: Matrix = []
    for fc in free:
        v = zero_vector(ncols)
        v[fc] = Fraction(1)
        for row, c in zip(ech, pivots):
            v[c] = -row[fc]
        basis.append(v)
    return basis


def mat_vec(rows: Matrix, v: Vector) -> Vector:
    return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in rows]
