"""Transitive closure of a binary relation given as a 0/1 matrix."""
from __future__ import annotations

from typing import List, Sequence

from .errors import InvalidMatrix
from .semiring import BOOLEAN, check_square, closure_in_place

RelationMatrix = List[List[int]]


def as_relation_matrix(cells: Sequence[Sequence[object]]) -> RelationMatrix:
    """Validate and copy a square matrix whose cells are exactly 0 or 1."""
    check_square(cells)
    out: RelationMatrix = []
    for i, row in enumerate(cells):
        new_row = []
        for j, cell in enumerate(row):
            # bool is an int subclass; True/False are accepted as 1/0
            if cell not in (0, 1) or isinstance(cell, float):
                raise InvalidMatrix(f"cell ({i}, {j}) is {cell!r}, expected 0 or 1")
            new_row.append(int(cell))
        out.append(new_row)
    return out


def transitive_closure(A: Sequence[Sequence[int]]) -> RelationMatrix:
    """Cell (i, j) of the result is 1 iff a path of length >= 1 leads from i to j.

    The diagonal is not forced to 1; a vertex relates to itself only if it
    lies on a cycle.
    """
    W = as_relation_matrix(A)
    return closure_in_place(W, BOOLEAN)


def _bool_product(X: RelationMatrix, Y: RelationMatrix) -> RelationMatrix:
    n = len(X)
    return [
        [1 if any(X[i][m] and Y[m][j] for m in range(n)) else 0 for j in range(n)]
        for i in range(n)
    ]


def closure_by_powers(A: Sequence[Sequence[int]]) -> RelationMatrix:
    """Boolean sum ``A + A^2 + ... + A^n``, computed by repeated matrix products.

    Independent of the kernel; used to cross-check :func:`transitive_closure`.
    """
    A = as_relation_matrix(A)
    n = len(A)
    total = [row[:] for row in A]
    power = [row[:] for row in A]
    for _ in range(n - 1):
        power = _bool_product(power, A)
        total = [[a | b for a, b in zip(r, s)] for r, s in zip(total, power)]
    return total
