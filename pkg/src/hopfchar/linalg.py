"""Small exact linear algebra over the rationals: reduced row echelon form,
null spaces, and span membership.  Sized for the dozens-of-dimensions systems
that show up in degree-truncated ideal computations."""

from __future__ import annotations

from fractions import Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)

Matrix = list[list[Fraction]]


def rref(rows: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the pivot column indices."""
    mat = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    cols = len(mat[0]) if mat else 0
    for c in range(cols):
        pivot_row = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                factor = mat[i][c]
                mat[i] = [x - factor * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def nullspace(rows: Matrix, cols: int) -> list[list[Fraction]]:
    """A basis of the solution space of ``rows . x = 0`` in dimension ``cols``."""
    if not rows:
        return [[_ONE if j == i else _ZERO for j in range(cols)] for i in range(cols)]
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    basis: list[list[Fraction]] = []
    for free in range(cols):
        if free in pivot_set:
            continue
        vec = [_ZERO] * cols
        vec[free] = _ONE
        for row, pivot in zip(reduced, pivots):
            vec[pivot] = -row[free]
        basis.append(vec)
    return basis


def in_span(vectors: Matrix, target: list[Fraction]) -> bool:
    """Whether ``target`` lies in the rational span of ``vectors``."""
    if all(x == 0 for x in target):
        return True
    if not vectors:
        return False
    _, pivots_without = rref(list(vectors))
    _, pivots_with = rref(list(vectors) + [list(target)])
    return len(pivots_with) == len(pivots_without)
