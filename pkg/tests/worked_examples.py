"""Worked examples transcribed verbatim from the reference material.

Indices are 1-based in the source; the helpers here convert to the 0-based
indices the library uses.
"""
from pathlib import Path

FIXTURES = Path(__file__).parent / "fixtures"

REL_A = [
    [0, 1, 0, 0, 0],
    [0, 0, 1, 1, 0],
    [0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0],
]

REL_CLOSURE = [
    [0, 1, 1, 1, 0],
    [0, 0, 1, 1, 0],
    [0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0],
    [0, 1, 1, 1, 0],
]

DAG_A = [
    [0, 1, 0, 1, 0, 1],
    [0, 0, 1, 0, 1, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 1, 0],
]

DAG_COUNTS = [
    [0, 1, 3, 4, 2, 1],
    [0, 0, 2, 2, 1, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, 0, 0],
    [0, 0, 1, 1, 1, 0],
]

DIGRAPH_ARCS = [(1, 2), (1, 3), (1, 5), (2, 3), (3, 1), (4, 3), (4, 5)]

# digraph path sets: non-empty cells, vertex strings written as digit sequences
DIGRAPH_PATHS = {
    (1, 2): {"12"},
    (1, 3): {"13", "123"},
    (1, 5): {"15"},
    (2, 1): {"231"},
    (2, 3): {"23"},
    (2, 5): {"2315"},
    (3, 1): {"31"},
    (3, 2): {"312"},
    (3, 5): {"315"},
    (4, 1): {"431"},
    (4, 2): {"4312"},
    (4, 3): {"43"},
    (4, 5): {"45"},
}


def arcs_to_matrix(n, arcs):
    A = [[0] * n for _ in range(n)]
    for i, j in arcs:
        A[i - 1][j - 1] = 1
    return A


def digraph_paths_matrix():
    """The digraph path sets as a 5x5 matrix of sets of 0-based index tuples."""
    W = [[set() for _ in range(5)] for _ in range(5)]
    for (i, j), strings in DIGRAPH_PATHS.items():
        W[i - 1][j - 1] = {tuple(int(c) - 1 for c in s) for s in strings}
    return W


SUBWORDS_6_GAPS = (2, 3, 4, 5)

SUBWORDS_6_A = [
    [0, 0, 1, 1, 1, 1],
    [0, 0, 0, 1, 1, 1],
    [0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0],
]

SUBWORDS_6_W = [
    [0, 0, 1, 1, 2, 3],
    [0, 0, 0, 1, 1, 2],
    [0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0],
]

SUBWORDS_6_R = [
    [1, 0, 1, 1, 2, 3],
    [0, 1, 0, 1, 1, 2],
    [0, 0, 1, 0, 1, 1],
    [0, 0, 0, 1, 0, 1],
    [0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1],
]

SUBWORDS_ABCDEF = {
    "a", "ac", "ad", "ae", "af", "ace", "acf", "adf", "b", "bd", "be", "bf", "bdf",
    "c", "ce", "cf", "d", "df", "e", "f",
}

SUBWORDS_ABCD_13 = {"a", "ab", "abc", "abcd", "ad", "b", "bc", "bcd", "c", "cd", "d"}

SUBWORDS_8_GAPS = (3, 4, 5, 6, 7)

# result matrix for abcdefgh, M = {3,...,7}: non-empty cells, 1-based
SUBWORDS_8_RESULT = {
    (1, 4): {"ad"},
    (1, 5): {"ae"},
    (1, 6): {"af"},
    (1, 7): {"ag", "adg"},
    (1, 8): {"ah", "adh", "aeh"},
    (2, 5): {"be"},
    (2, 6): {"bf"},
    (2, 7): {"bg"},
    (2, 8): {"bh", "beh"},
    (3, 6): {"cf"},
    (3, 7): {"cg"},
    (3, 8): {"ch"},
    (4, 7): {"dg"},
    (4, 8): {"dh"},
    (5, 8): {"eh"},
}

# the initial matrix for the same run: one two-letter word per arc
SUBWORDS_8_INITIAL = {
    (i, j): {"abcdefgh"[i - 1] + "abcdefgh"[j - 1]}
    for i in range(1, 9) for j in range(1, 9) if (j - i) in SUBWORDS_8_GAPS
}

AUTOMATON_STATES = ("q1", "q2", "q3", "q4", "q5")
AUTOMATON_ALPHABET = ("a", "b", "c", "d")
AUTOMATON_ROWS = {
    "q1": {"a": ["q1", "q2"], "b": ["q1"], "d": ["q5"]},
    "q2": {"a": ["q1"], "b": ["q3"], "c": ["q2"], "d": ["q3"]},
    "q3": {"b": ["q4"]},
    "q4": {"b": ["q5"]},
    "q5": {"b": ["q2"]},
}


def _sets(rows):
    return [[set(cell) for cell in row] for row in rows]


E = ""
AUTOMATON_A = _sets([
    ["ab", "a", E, E, "d"],
    ["a", "c", "bd", E, E],
    [E, E, E, "b", E],
    [E, E, E, E, "b"],
    [E, "b", E, E, E],
])

AUTOMATON_W = _sets([
    ["ab", "a", E, E, "d"],
    ["a", "abc", "bd", "b", "b"],
    [E, "b", "b", "b", "b"],
    [E, "b", "b", "b", "b"],
    [E, "b", "b", "b", "b"],
])
