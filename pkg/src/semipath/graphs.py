"""Small digraph helpers used to validate kernel preconditions."""
from __future__ import annotations

from typing import Callable, List, Optional, Sequence


def arcs_from_matrix(cells: Sequence[Sequence[object]], is_arc: Callable[[object], bool]) -> List[List[int]]:
    """Successor lists for every row, keeping arcs where ``is_arc(cell)`` holds."""
    return [[j for j, cell in enumerate(row) if is_arc(cell)] for row in cells]


def find_cycle(successors: Sequence[Sequence[int]]) -> Optional[List[int]]:
    """Return one directed cycle as a vertex list (first vertex repeated last), or None.

    Iterative three-colour DFS; a self-loop is reported as ``[v, v]``.
    """
    n = len(successors)
    WHITE, GREY, BLACK = 0, 1, 2
    colour = [WHITE] * n
    parent = [-1] * n
    for root in range(n):
        if colour[root] != WHITE:
            continue
        colour[root] = GREY
        stack = [(root, iter(successors[root]))]
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if colour[w] == GREY:
                    cycle = [w]
                    u = v
                    while u != w:
                        cycle.append(u)
                        u = parent[u]
                    cycle.append(w)
                    cycle.reverse()
                    return cycle
                if colour[w] == WHITE:
                    colour[w] = GREY
                    parent[w] = v
                    stack.append((w, iter(successors[w])))
                    advanced = True
                    break
            if not advanced:
                colour[v] = BLACK
                stack.pop()
    return None
