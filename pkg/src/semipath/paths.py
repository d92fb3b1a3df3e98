"""Enumeration of all simple paths with the string-set ("Latin square") algebra.

A path is a tuple of vertex indices; a cell holds a frozenset of such
tuples. Multiplying two cells concatenates each left path with each right
path minus its first vertex, keeping only results that stay simple.
"""
from __future__ import annotations

from typing import FrozenSet, List, Optional, Sequence, Tuple

from .errors import SelfLoop, SizeLimitExceeded
from .relations import as_relation_matrix
from .semiring import ClosureSemiring, closure_in_place

VertexString = Tuple[int, ...]
PathSet = FrozenSet[VertexString]
PathMatrix = List[List[PathSet]]

EMPTY: PathSet = frozenset()


def trimmed_product(P: PathSet, Q: PathSet) -> PathSet:
    """``{a + b[1:] : a in P, b in Q}`` restricted to pairs where ``a`` and ``b[1:]`` share no vertex."""
    if not P or not Q:
        return EMPTY
    tails = [(b[1:], frozenset(b[1:])) for b in Q]
    out = set()
    for a in P:
        seen = frozenset(a)
        for tail, tail_set in tails:
            if seen.isdisjoint(tail_set):
                out.add(a + tail)
    return frozenset(out)


def _union(P: PathSet, Q: PathSet) -> PathSet:
    return P | Q


PATH_SETS: ClosureSemiring[PathSet] = ClosureSemiring("path-sets", _union, trimmed_product, EMPTY)


def _capped(limit: int) -> ClosureSemiring[PathSet]:
    def union(P: PathSet, Q: PathSet) -> PathSet:
        out = P | Q
        if len(out) > limit:
            raise SizeLimitExceeded(f"a cell exceeded {limit} paths")
        return out

    return ClosureSemiring("path-sets", union, trimmed_product, EMPTY)


def initial_path_matrix(A: Sequence[Sequence[int]]) -> PathMatrix:
    """Cell (i, j) is ``{(i, j)}`` for an arc and empty otherwise."""
    A = as_relation_matrix(A)
    n = len(A)
    for i in range(n):
        if A[i][i]:
            raise SelfLoop(f"self-loop at vertex index {i}; simple paths cannot use it")
    return [[frozenset({(i, j)}) if A[i][j] else EMPTY for j in range(n)] for i in range(n)]


def enumerate_paths(A: Sequence[Sequence[int]], max_paths_per_cell: Optional[int] = None) -> PathMatrix:
    """Every simple path (two or more vertices) from i to j, for all i, j.

    Works on cyclic digraphs; self-loops are rejected. With
    ``max_paths_per_cell`` set, :class:`SizeLimitExceeded` is raised as soon
    as any cell grows past it.
    """
    W = initial_path_matrix(A)
    semiring = PATH_SETS if max_paths_per_cell is None else _capped(max_paths_per_cell)
    return closure_in_place(W, semiring)


def sorted_paths(cell: PathSet) -> List[VertexString]:
    return sorted(cell)
