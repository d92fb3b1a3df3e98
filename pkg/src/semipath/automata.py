"""Single-letter power reachability in (nondeterministic) finite automata.

For states p, q the result holds every letter ``a`` such that q is reachable
from p by reading ``a`` one or more times. Initial and final states play no
role here.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Mapping, Sequence, Tuple

from .errors import InvalidMatrix, UnknownLetter, UnknownState
from .semiring import LETTER_SETS, closure_in_place

LetterSet = FrozenSet[str]
LetterSetMatrix = List[List[LetterSet]]


@dataclass(frozen=True)
class TransitionTable:
    """States, alphabet and a transition relation ``(state, letter) -> set of states``.

    Missing entries mean no transition. Targets must be declared states.
    """

    states: Tuple[str, ...]
    alphabet: Tuple[str, ...]
    transitions: Mapping[Tuple[str, str], FrozenSet[str]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        if not self.states:
            raise InvalidMatrix("automaton needs at least one state")
        if not self.alphabet:
            raise InvalidMatrix("automaton needs a non-empty alphabet")
        if len(set(self.states)) != len(self.states):
            raise InvalidMatrix("state names must be unique")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise InvalidMatrix("alphabet letters must be unique")
        known_states = set(self.states)
        known_letters = set(self.alphabet)
        clean: Dict[Tuple[str, str], FrozenSet[str]] = {}
        for (src, letter), targets in self.transitions.items():
            if src not in known_states:
                raise UnknownState(f"unknown state {src!r}")
            if letter not in known_letters:
                raise UnknownLetter(f"unknown letter {letter!r}")
            targets = frozenset(targets)
            for t in targets:
                if t not in known_states:
                    raise UnknownState(f"unknown target state {t!r}")
            if targets:
                clean[(src, letter)] = clean.get((src, letter), frozenset()) | targets
        object.__setattr__(self, "transitions", clean)

    def delta(self, state: str, letter: str) -> FrozenSet[str]:
        return self.transitions.get((state, letter), frozenset())

    def state_index(self, state: str) -> int:
        try:
            return self.states.index(state)
        except ValueError:
            raise UnknownState(f"unknown state {state!r}") from None


def _mask_matrix(T: TransitionTable) -> List[List[int]]:
    index = {s: i for i, s in enumerate(T.states)}
    bit = {a: 1 << b for b, a in enumerate(T.alphabet)}
    n = len(T.states)
    M = [[0] * n for _ in range(n)]
    for (src, letter), targets in T.transitions.items():
        for t in targets:
            M[index[src]][index[t]] |= bit[letter]
    return M


def _letters(T: TransitionTable, mask: int) -> LetterSet:
    return frozenset(a for b, a in enumerate(T.alphabet) if mask >> b & 1)


def letter_matrix(T: TransitionTable) -> LetterSetMatrix:
    """Cell (p, q) is the set of letters with a one-step transition from p to q."""
    return [[_letters(T, m) for m in row] for row in _mask_matrix(T)]


def letter_power_closure(T: TransitionTable) -> LetterSetMatrix:
    """Cell (p, q) is ``{a : q reachable from p reading a^k for some k >= 1}``."""
    W = closure_in_place(_mask_matrix(T), LETTER_SETS)
    return [[_letters(T, m) for m in row] for row in W]


def oracle_letter_reachability(T: TransitionTable, p: str, q: str) -> LetterSet:
    """Per-letter breadth-first search from ``p`` over ``a``-labelled transitions only.

    Independent of the kernel; used to cross-check :func:`letter_power_closure`.
    """
    T.state_index(p)
    T.state_index(q)
    found = set()
    for a in T.alphabet:
        seen = set()
        queue = deque(T.delta(p, a))
        seen.update(queue)
        while queue:
            s = queue.popleft()
            for t in T.delta(s, a):
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
        if q in seen:
            found.add(a)
    return frozenset(found)


def table_from_rows(states: Sequence[str], alphabet: Sequence[str],
                    rows: Mapping[str, Mapping[str, Sequence[str]]]) -> TransitionTable:
    """Convenience constructor from ``{state: {letter: [targets]}}``."""
    transitions = {}
    for src, by_letter in rows.items():
        for letter, targets in by_letter.items():
            transitions[(src, letter)] = frozenset(targets)
    return TransitionTable(tuple(states), tuple(alphabet), transitions)
