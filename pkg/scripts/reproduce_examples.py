"""Re-run every worked example and report whether the library reproduces it.

    python scripts/reproduce_examples.py

Exits non-zero if any example differs; differences are printed cell by cell.
"""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from worked_examples import (  # noqa: E402
    REL_A,
    REL_CLOSURE,
    DAG_A,
    DAG_COUNTS,
    DIGRAPH_ARCS,
    AUTOMATON_ALPHABET,
    AUTOMATON_ROWS,
    AUTOMATON_STATES,
    AUTOMATON_W,
    SUBWORDS_6_GAPS,
    SUBWORDS_6_R,
    SUBWORDS_6_W,
    SUBWORDS_8_GAPS,
    SUBWORDS_8_RESULT,
    SUBWORDS_ABCD_13,
    SUBWORDS_ABCDEF,
    arcs_to_matrix,
    digraph_paths_matrix,
)

from semipath import (  # noqa: E402
    count_paths,
    enumerate_m_subwords,
    enumerate_paths,
    letter_power_closure,
    m_complexity,
    m_subword_matrix,
    transitive_closure,
)
from semipath.automata import table_from_rows  # noqa: E402


def diff_cells(got, expected):
    return [(i + 1, j + 1, got[i][j], expected[i][j])
            for i in range(len(expected)) for j in range(len(expected))
            if got[i][j] != expected[i][j]]


def main() -> int:
    failures = 0

    def report(name, diffs):
        nonlocal failures
        print(f"{'ok  ' if not diffs else 'DIFF'}  {name}")
        for d in diffs:
            print("        ", d)
        failures += bool(diffs)

    report("transitive closure of the 5-element relation", diff_cells(transitive_closure(REL_A), REL_CLOSURE))
    report("path counts in the 6-vertex DAG", diff_cells(count_paths(DAG_A), DAG_COUNTS))
    report("all paths of the 5-vertex digraph", diff_cells(enumerate_paths(arcs_to_matrix(5, DIGRAPH_ARCS)), digraph_paths_matrix()))

    r = m_complexity(6, SUBWORDS_6_GAPS)
    report("K(6,{2,3,4,5}) = 20, W and R", diff_cells(r.W, SUBWORDS_6_W) + diff_cells(r.R, SUBWORDS_6_R)
           + ([("K", r.K, 20)] if r.K != 20 else []))
    got = enumerate_m_subwords("abcd", {1, 3}, include_singletons=True)
    report("abcd has 11 {1,3}-subwords", [] if got == SUBWORDS_ABCD_13 else [sorted(got ^ SUBWORDS_ABCD_13)])
    got = enumerate_m_subwords("abcdef", SUBWORDS_6_GAPS, include_singletons=True)
    report("{2,3,4,5}-subwords of abcdef", [] if got == SUBWORDS_ABCDEF else [sorted(got ^ SUBWORDS_ABCDEF)])
    M = m_subword_matrix("abcdefgh", SUBWORDS_8_GAPS)
    expected = [[SUBWORDS_8_RESULT.get((i + 1, j + 1), set()) for j in range(8)] for i in range(8)]
    report("n = 8, M = {3,...,7} result matrix", diff_cells(M, expected))

    T = table_from_rows(AUTOMATON_STATES, AUTOMATON_ALPHABET, AUTOMATON_ROWS)
    report("automaton letter powers", diff_cells(letter_power_closure(T), AUTOMATON_W))
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
