"""All-pairs shortest and longest distances over the tropical semirings."""
from __future__ import annotations

from numbers import Real
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .errors import CyclicInput, InvalidMatrix, NegativeCycle
from .graphs import arcs_from_matrix, find_cycle
from .semiring import MAX_PLUS, MIN_PLUS, UNREACHABLE, check_square, closure_in_place, copy_matrix

Distance = Union[int, float, type(UNREACHABLE)]
DistanceMatrix = List[List[Distance]]
SuccessorMatrix = List[List[Optional[int]]]


def _is_finite(value) -> bool:
    return value is not UNREACHABLE


def distance_matrix(n: int, arcs: Iterable[Tuple[int, int, Real]]) -> DistanceMatrix:
    """Build the start matrix: 0 on the diagonal, arc weight, or UNREACHABLE.

    A self-loop only matters when its weight is negative, in which case it
    replaces the 0 on the diagonal so the negative cycle is detected.
    """
    D: DistanceMatrix = [[UNREACHABLE] * n for _ in range(n)]
    for i in range(n):
        D[i][i] = 0
    for i, j, w in arcs:
        if i == j:
            if w < 0:
                D[i][i] = w
            continue
        D[i][j] = w
    return D


def _validate(D0: Sequence[Sequence[Distance]]) -> int:
    n = check_square(D0)
    for i, row in enumerate(D0):
        for j, cell in enumerate(row):
            if cell is UNREACHABLE:
                continue
            if isinstance(cell, bool) or not isinstance(cell, Real) or cell != cell or abs(cell) == float("inf"):
                raise InvalidMatrix(f"cell ({i}, {j}) is {cell!r}, expected a finite weight or UNREACHABLE")
    return n


def floyd_warshall(D0: Sequence[Sequence[Distance]]) -> Tuple[DistanceMatrix, SuccessorMatrix]:
    """Shortest distances and a next-hop matrix for path reconstruction.

    ``next[i][j]`` is the vertex after ``i`` on one shortest i->j path. It is
    only rewritten on strict improvement, so among equal-length paths the one
    found first (lowest intermediate vertex) is kept.

    Raises :class:`NegativeCycle` if some diagonal distance ends up negative.
    """
    n = _validate(D0)
    for i in range(n):
        if D0[i][i] is UNREACHABLE or D0[i][i] > 0:
            raise InvalidMatrix(f"diagonal cell ({i}, {i}) must be 0")
    D = copy_matrix(D0)
    nxt: SuccessorMatrix = [
        [j if (i != j and _is_finite(D[i][j])) else None for j in range(n)] for i in range(n)
    ]

    def on_update(i: int, k: int, j: int) -> None:
        nxt[i][j] = nxt[i][k]

    closure_in_place(D, MIN_PLUS, on_update)

    negative = [i for i in range(n) if D[i][i] < 0]
    if negative:
        raise NegativeCycle(f"negative cycle through vertex index {negative[0]}")
    return D, nxt


def reconstruct_path(nxt: Sequence[Sequence[Optional[int]]], i: int, j: int) -> List[int]:
    """Vertex indices of one shortest i->j path, ``[i]`` for i == j, ``[]`` if unreachable."""
    n = len(nxt)
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"vertex index out of range for n={n}")
    if i == j:
        return [i]
    if nxt[i][j] is None:
        return []
    path = [i]
    v = i
    while v != j:
        v = nxt[v][j]
        if v is None or len(path) > n:
            raise InvalidMatrix("successor matrix does not lead to the target")
        path.append(v)
    return path


def longest_paths_dag(D0: Sequence[Sequence[Distance]]) -> DistanceMatrix:
    """Longest distances in an acyclic digraph via the (max, +) semiring.

    Off-diagonal UNREACHABLE cells are non-arcs; the diagonal stays 0.
    """
    n = _validate(D0)
    successors = arcs_from_matrix(D0, _is_finite)
    for i in range(n):
        successors[i] = [j for j in successors[i] if j != i]
    cycle = find_cycle(successors)
    if cycle is not None:
        raise CyclicInput("longest paths need an acyclic digraph; cycle through indices "
                          + " -> ".join(map(str, cycle)))
    D = copy_matrix(D0)
    for i in range(n):
        D[i][i] = 0
    return closure_in_place(D, MAX_PLUS)
