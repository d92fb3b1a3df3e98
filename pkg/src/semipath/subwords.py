"""Scattered subwords of rainbow words with prescribed index gaps.

For a word of length ``n`` and a gap set ``M``, an M-subword picks letters at
increasing positions whose consecutive differences all lie in ``M``. These
are exactly the paths of the "gap graph" (arc i->j iff j - i in M) plus the
single letters, so the count comes from the path-counting kernel and the
listing from the path-enumeration kernel.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Set, Tuple

from .counting import CountMatrix, count_paths
from .errors import InvalidGap, NotRainbow
from .paths import enumerate_paths


def gap_set(gaps: Iterable[int], n: int) -> FrozenSet[int]:
    """Validate a gap set against word length ``n``: every gap must lie in 1..n-1."""
    out = frozenset(gaps)
    bad = sorted(m for m in out if isinstance(m, bool) or not isinstance(m, int) or not 1 <= m <= n - 1)
    if bad:
        raise InvalidGap(f"gaps {bad} outside 1..{n - 1} for n={n}")
    return out


def _check_length(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidGap(f"word length must be a positive integer, got {n!r}")


def build_m_graph(n: int, M: Iterable[int]) -> List[List[int]]:
    _check_length(n)
    gaps = gap_set(M, n)
    return [[1 if (j - i) in gaps else 0 for j in range(n)] for i in range(n)]


@dataclass(frozen=True)
class ComplexityReport:
    n: int
    gaps: Tuple[int, ...]
    K: int
    W: Optional[CountMatrix] = None
    R: Optional[CountMatrix] = None

    @property
    def nontrivial(self) -> int:
        """Subwords of length at least 2, i.e. ``K - n``."""
        return self.K - self.n


def m_complexity(n: int, M: Iterable[int]) -> ComplexityReport:
    """Count M-subwords of any rainbow word of length ``n``.

    ``W`` counts gap-graph paths, ``R = I + W`` adds the single letters and
    ``K`` is the sum of ``R``.
    """
    _check_length(n)
    gaps = gap_set(M, n)
    W = count_paths(build_m_graph(n, gaps))
    R = [[w + (1 if i == j else 0) for j, w in enumerate(row)] for i, row in enumerate(W)]
    K = sum(map(sum, R))
    return ComplexityReport(n=n, gaps=tuple(sorted(gaps)), K=K, W=W, R=R)


def check_rainbow(word: str) -> None:
    if not word:
        raise NotRainbow("word must be non-empty")
    seen: Set[str] = set()
    for pos, letter in enumerate(word, start=1):
        if letter in seen:
            raise NotRainbow(f"letter {letter!r} repeats at position {pos}")
        seen.add(letter)


def m_subword_matrix(word: str, M: Iterable[int]) -> List[List[FrozenSet[str]]]:
    """Cell (i, j) holds the M-subwords of length >= 2 that start at position i and end at j."""
    check_rainbow(word)
    n = len(word)
    W = enumerate_paths(build_m_graph(n, M))
    return [
        [frozenset("".join(word[v] for v in path) for path in cell) for cell in row]
        for row in W
    ]


def enumerate_m_subwords(word: str, M: Iterable[int], include_singletons: bool = False) -> FrozenSet[str]:
    """All M-subwords of a rainbow word; length >= 2 only unless ``include_singletons``."""
    out: Set[str] = set()
    for row in m_subword_matrix(word, M):
        for cell in row:
            out |= cell
    if include_singletons:
        out.update(word)
    return frozenset(out)


def subword_order(word: str):
    """Sort key placing subwords in lexicographic order of their position sequences."""
    position = {letter: i for i, letter in enumerate(word)}
    return lambda sub: [position[c] for c in sub]
