"""Number of directed paths between every vertex pair of a DAG."""
from __future__ import annotations

from typing import List, Sequence

from .errors import CyclicInput
from .graphs import arcs_from_matrix, find_cycle
from .relations import as_relation_matrix
from .semiring import COUNTING, closure_in_place

CountMatrix = List[List[int]]


def require_acyclic(A: Sequence[Sequence[int]]) -> None:
    cycle = find_cycle(arcs_from_matrix(A, bool))
    if cycle is not None:
        raise CyclicInput("digraph has a cycle through indices " + " -> ".join(map(str, cycle)))


def count_paths(A: Sequence[Sequence[int]]) -> CountMatrix:
    """Cell (i, j) holds how many distinct paths of length >= 1 run from i to j.

    Counts are Python ints, so they never overflow. Raises
    :class:`CyclicInput` when ``A`` has a directed cycle (including a
    self-loop), since counts would be infinite.
    """
    W = as_relation_matrix(A)
    require_acyclic(W)
    return closure_in_place(W, COUNTING)
