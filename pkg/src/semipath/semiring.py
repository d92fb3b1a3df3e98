"""Closure semirings and the generic Warshall kernel.

Every algorithm in the package is one call to :func:`closure_in_place` with a
different :class:`ClosureSemiring`. The kernel is the plain k/i/j triple loop;
it updates the matrix in place, so iteration ``k`` sees row and column ``k``
as already updated during that same iteration.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Generic, List, Optional, Sequence, TypeVar

from .errors import InvalidMatrix

T = TypeVar("T")

Matrix = List[List[T]]
UpdateHook = Callable[[int, int, int], None]


class _Unreachable:
    """Singleton marking "no path" in distance matrices.

    Kept distinct from any number so ``UNREACHABLE + w`` is never computed;
    the tropical semirings short-circuit on it.
    """

    _instance: Optional["_Unreachable"] = None

    def __new__(cls) -> "_Unreachable":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNREACHABLE"

    def __reduce__(self):
        return (_Unreachable, ())


UNREACHABLE = _Unreachable()


@dataclass(frozen=True)
class ClosureSemiring(Generic[T]):
    """The algebra the kernel is generic over.

    ``combine`` plays the role of addition (merging alternative paths) and
    ``extend`` the role of multiplication (concatenating a path through an
    intermediate vertex). ``zero`` is the additive identity, also used as the
    "nothing here" cell value. No multiplicative unit is needed.
    """

    name: str
    combine: Callable[[T, T], T]
    extend: Callable[[T, T], T]
    zero: T

    def is_zero(self, value: T) -> bool:
        if self.zero is UNREACHABLE:
            return value is UNREACHABLE
        return value == self.zero


def check_square(cells: Sequence[Sequence[object]]) -> int:
    """Return ``n`` for an n-by-n matrix, raising :class:`InvalidMatrix` otherwise."""
    n = len(cells)
    if n < 1:
        raise InvalidMatrix("matrix must have at least one row")
    for i, row in enumerate(cells):
        if len(row) != n:
            raise InvalidMatrix(f"row {i} has {len(row)} cells, expected {n}")
    return n


def copy_matrix(cells: Sequence[Sequence[T]]) -> Matrix[T]:
    return [list(row) for row in cells]


def closure_in_place(
    W: Matrix[T],
    semiring: ClosureSemiring[T],
    on_update: Optional[UpdateHook] = None,
) -> Matrix[T]:
    """Run ``w[i][j] <- w[i][j] (+) (w[i][k] (x) w[k][j])`` for k, then i, then j.

    ``W`` is modified and returned. When either factor is zero the update is
    skipped, which cannot change the result because zero absorbs under
    ``extend`` and is neutral for ``combine``.

    ``on_update(i, k, j)`` is called after cell (i, j) changed value while
    routing through ``k``; callers use it for side bookkeeping such as
    successor matrices. The semiring itself never sees indices.
    """
    n = check_square(W)
    combine = semiring.combine
    extend = semiring.extend
    is_zero = semiring.is_zero
    for k in range(n):
        row_k = W[k]
        for i in range(n):
            row_i = W[i]
            # a zero w_ik stays zero for the whole j loop
            if is_zero(row_i[k]):
                continue
            for j in range(n):
                w_ik = row_i[k]
                w_kj = row_k[j]
                if is_zero(w_kj):
                    continue
                old = row_i[j]
                new = combine(old, extend(w_ik, w_kj))
                row_i[j] = new
                if on_update is not None and new != old:
                    on_update(i, k, j)
    return W


# -- shipped instances ----------------------------------------------------

def _bool_or(a: int, b: int) -> int:
    return 1 if (a or b) else 0


def _bool_and(a: int, b: int) -> int:
    return 1 if (a and b) else 0


BOOLEAN: ClosureSemiring[int] = ClosureSemiring("boolean", _bool_or, _bool_and, 0)


def _min(a, b):
    if a is UNREACHABLE:
        return b
    if b is UNREACHABLE:
        return a
    return b if b < a else a


def _max(a, b):
    if a is UNREACHABLE:
        return b
    if b is UNREACHABLE:
        return a
    return b if b > a else a


def _plus(a, b):
    if a is UNREACHABLE or b is UNREACHABLE:
        return UNREACHABLE
    return a + b


MIN_PLUS: ClosureSemiring = ClosureSemiring("min-plus", _min, _plus, UNREACHABLE)
MAX_PLUS: ClosureSemiring = ClosureSemiring("max-plus", _max, _plus, UNREACHABLE)


def _add(a: int, b: int) -> int:
    return a + b


def _mul(a: int, b: int) -> int:
    return a * b


# combine is ordinary addition, so this one is not idempotent; it is only
# meaningful on acyclic inputs.
COUNTING: ClosureSemiring[int] = ClosureSemiring("counting", _add, _mul, 0)


def _bit_or(a: int, b: int) -> int:
    return a | b


def _bit_and(a: int, b: int) -> int:
    return a & b


# letter sets encoded as bitmasks over an alphabet ordering
LETTER_SETS: ClosureSemiring[int] = ClosureSemiring("letter-sets", _bit_or, _bit_and, 0)
