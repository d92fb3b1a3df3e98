"""Algebraic path problems solved with one generic Warshall kernel."""
from .automata import (
    TransitionTable,
    letter_matrix,
    letter_power_closure,
    oracle_letter_reachability,
)
from .counting import count_paths
from .errors import (
    CyclicInput,
    DuplicateEdge,
    InvalidGap,
    InvalidMatrix,
    NegativeCycle,
    NotRainbow,
    ParseError,
    SelfLoop,
    SemipathError,
    SizeLimitExceeded,
    UnknownLetter,
    UnknownState,
    UnknownVertex,
)
from .graphio import GraphDocument, MatrixReport, SubwordsReport, parse_graph, parse_transition_table, render
from .paths import PATH_SETS, enumerate_paths, trimmed_product
from .relations import closure_by_powers, transitive_closure
from .semiring import (
    BOOLEAN,
    COUNTING,
    LETTER_SETS,
    MAX_PLUS,
    MIN_PLUS,
    UNREACHABLE,
    ClosureSemiring,
    closure_in_place,
)
from .shortest import distance_matrix, floyd_warshall, longest_paths_dag, reconstruct_path
from .subwords import (
    ComplexityReport,
    build_m_graph,
    enumerate_m_subwords,
    m_complexity,
    m_subword_matrix,
)

__version__ = "0.1.0"
