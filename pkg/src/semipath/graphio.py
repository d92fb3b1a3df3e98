"""Input parsing and output rendering.

Graphs arrive as edge lists or JSON, automata as JSON transition tables.
Results are wrapped in small report dataclasses and rendered either as an
aligned text grid or as compact, deterministic JSON.

Edge-list format::

    # comments start with '#'
    5                      <- vertex count, names "1".."5"
    1 2                    <- arc 1 -> 2
    2 3 4.5                <- arc with weight

or, instead of the count, a header ``vertices: a,b,c`` naming the vertices.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import singledispatch
from typing import Any, Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

from .automata import TransitionTable
from .errors import DuplicateEdge, ParseError, UnknownLetter, UnknownState, UnknownVertex
from .semiring import UNREACHABLE
from .subwords import ComplexityReport

Weight = Union[int, float]
Text = Union[str, bytes]


class Edge(NamedTuple):
    source: str
    target: str
    weight: Optional[Weight] = None


@dataclass(frozen=True)
class GraphDocument:
    vertices: Tuple[str, ...]
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(Edge(*e) for e in self.edges))
        if not self.vertices:
            raise ParseError("graph needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise ParseError("vertex names must be unique")
        names = set(self.vertices)
        seen = set()
        for e in self.edges:
            for end in (e.source, e.target):
                if end not in names:
                    raise UnknownVertex(f"unknown vertex {end!r}")
            if (e.source, e.target) in seen:
                raise DuplicateEdge(f"duplicate edge {e.source} -> {e.target}")
            seen.add((e.source, e.target))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def index(self, name: str) -> int:
        try:
            return self.vertices.index(name)
        except ValueError:
            raise UnknownVertex(f"unknown vertex {name!r}") from None

    def adjacency(self) -> List[List[int]]:
        pos = {v: i for i, v in enumerate(self.vertices)}
        A = [[0] * self.n for _ in range(self.n)]
        for e in self.edges:
            A[pos[e.source]][pos[e.target]] = 1
        return A

    def weighted_arcs(self, default_weight: Weight = 1) -> List[Tuple[int, int, Weight]]:
        """Arcs as index triples; unweighted edges get ``default_weight``."""
        pos = {v: i for i, v in enumerate(self.vertices)}
        return [
            (pos[e.source], pos[e.target], default_weight if e.weight is None else e.weight)
            for e in self.edges
        ]

    def self_loops(self) -> List[str]:
        return [e.source for e in self.edges if e.source == e.target]


# -- parsing --------------------------------------------------------------

def _decode(text: Text) -> str:
    if isinstance(text, bytes):
        try:
            return text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8 (byte {exc.start})") from None
    return text


def _parse_weight(token: str, line: int, column: int) -> Weight:
    try:
        return int(token)
    except ValueError:
        pass
    try:
        value = float(token)
    except ValueError:
        raise ParseError(f"bad weight {token!r}", line=line, column=column) from None
    if not math.isfinite(value):
        raise ParseError(f"weight must be finite, got {token!r}", line=line, column=column)
    return value


def _unify_weights(edges: List[Edge]) -> List[Edge]:
    # integers stay exact unless some weight needed a float
    if any(isinstance(e.weight, float) for e in edges):
        return [e if e.weight is None else e._replace(weight=float(e.weight)) for e in edges]
    return edges


def _parse_edge_list(text: str) -> GraphDocument:
    vertices: Optional[List[str]] = None
    edges: List[Edge] = []
    seen: Dict[Tuple[str, str], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        column = raw.index(line[0]) + 1
        if vertices is None:
            vertices = _parse_header(line, lineno, column)
            continue
        tokens = line.split()
        if len(tokens) not in (2, 3):
            raise ParseError(f"expected 'u v' or 'u v w', got {line!r}", line=lineno, column=column)
        u, v = tokens[0], tokens[1]
        for name in (u, v):
            if name not in vertices:
                raise UnknownVertex(f"unknown vertex {name!r}", line=lineno, column=raw.index(name) + 1)
        if (u, v) in seen:
            raise DuplicateEdge(f"duplicate edge {u} -> {v} (first on line {seen[(u, v)]})",
                                line=lineno, column=column)
        seen[(u, v)] = lineno
        weight = None
        if len(tokens) == 3:
            weight = _parse_weight(tokens[2], lineno, raw.rindex(tokens[2]) + 1)
        edges.append(Edge(u, v, weight))
    if vertices is None:
        raise ParseError("missing header line (vertex count or 'vertices: ...')", line=1)
    return GraphDocument(tuple(vertices), tuple(_unify_weights(edges)))


def _parse_header(line: str, lineno: int, column: int) -> List[str]:
    if line.lower().startswith("vertices:"):
        names = [name.strip() for name in line.split(":", 1)[1].split(",")]
        if not names or any(not name or any(c.isspace() for c in name) for name in names):
            raise ParseError("vertex names must be non-empty and contain no whitespace",
                             line=lineno, column=column)
        if len(set(names)) != len(names):
            raise ParseError("vertex names must be unique", line=lineno, column=column)
        return names
    try:
        n = int(line)
    except ValueError:
        raise ParseError(f"expected vertex count or 'vertices: ...', got {line!r}",
                         line=lineno, column=column) from None
    if n < 1:
        raise ParseError("vertex count must be at least 1", line=lineno, column=column)
    return [str(i) for i in range(1, n + 1)]


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from None


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ParseError(message)


def _parse_json_graph(text: str) -> GraphDocument:
    data = _load_json(text)
    _require(isinstance(data, dict), "graph JSON must be an object")
    names = data.get("vertices")
    _require(isinstance(names, list) and all(isinstance(v, str) for v in names),
             "'vertices' must be an array of strings")
    raw_edges = data.get("edges", [])
    _require(isinstance(raw_edges, list), "'edges' must be an array")
    known = set(names)
    edges: List[Edge] = []
    seen = set()
    for pos, item in enumerate(raw_edges):
        _require(isinstance(item, dict), f"edge #{pos} must be an object")
        u, v = item.get("from"), item.get("to")
        _require(isinstance(u, str) and isinstance(v, str), f"edge #{pos} needs string 'from' and 'to'")
        for name in (u, v):
            if name not in known:
                raise UnknownVertex(f"edge #{pos}: unknown vertex {name!r}")
        if (u, v) in seen:
            raise DuplicateEdge(f"edge #{pos}: duplicate edge {u} -> {v}")
        seen.add((u, v))
        weight = item.get("weight")
        if weight is not None:
            _require(isinstance(weight, (int, float)) and not isinstance(weight, bool)
                     and math.isfinite(weight), f"edge #{pos}: weight must be a finite number")
        edges.append(Edge(u, v, weight))
    return GraphDocument(tuple(names), tuple(_unify_weights(edges)))


def parse_graph(text: Text, format: str = "auto") -> GraphDocument:
    """Parse an edge list (``format="edge-list"``) or JSON graph (``"json"``).

    ``"auto"`` picks JSON when the first non-blank character is ``{``.
    """
    text = _decode(text)
    if format == "auto":
        format = "json" if text.lstrip().startswith("{") else "edge-list"
    if format == "edge-list":
        return _parse_edge_list(text)
    if format == "json":
        return _parse_json_graph(text)
    raise ValueError(f"unknown graph format {format!r}")


def parse_transition_table(text: Text) -> TransitionTable:
    """Parse ``{"states": [...], "alphabet": [...], "transitions": [{"from", "on", "to": [...]}]}``."""
    data = _load_json(_decode(text))
    _require(isinstance(data, dict), "automaton JSON must be an object")
    states = data.get("states")
    alphabet = data.get("alphabet")
    _require(isinstance(states, list) and states and all(isinstance(s, str) for s in states),
             "'states' must be a non-empty array of strings")
    _require(isinstance(alphabet, list) and alphabet and all(isinstance(a, str) for a in alphabet),
             "'alphabet' must be a non-empty array of strings")
    _require(len(set(states)) == len(states), "state names must be unique")
    _require(len(set(alphabet)) == len(alphabet), "letters must be unique")
    raw = data.get("transitions", [])
    _require(isinstance(raw, list), "'transitions' must be an array")
    known_states, known_letters = set(states), set(alphabet)
    transitions: Dict[Tuple[str, str], frozenset] = {}
    for pos, item in enumerate(raw):
        _require(isinstance(item, dict), f"transition #{pos} must be an object")
        src, letter, targets = item.get("from"), item.get("on"), item.get("to")
        _require(isinstance(src, str) and isinstance(letter, str), f"transition #{pos} needs string 'from' and 'on'")
        _require(isinstance(targets, list) and all(isinstance(t, str) for t in targets),
                 f"transition #{pos}: 'to' must be an array of state names")
        if src not in known_states:
            raise UnknownState(f"transition #{pos}: unknown state {src!r}")
        if letter not in known_letters:
            raise UnknownLetter(f"transition #{pos}: unknown letter {letter!r}")
        for t in targets:
            if t not in known_states:
                raise UnknownState(f"transition #{pos}: unknown target state {t!r}")
        transitions[(src, letter)] = transitions.get((src, letter), frozenset()) | frozenset(targets)
    return TransitionTable(tuple(states), tuple(alphabet), transitions)


# -- reports --------------------------------------------------------------

MATRIX_KINDS = ("relation", "distance", "longest", "count", "paths", "letters")


class Route(NamedTuple):
    source: str
    target: str
    distance: Any
    vertices: Tuple[str, ...]


@dataclass(frozen=True)
class MatrixReport:
    """A result matrix labelled by vertex (or state) names.

    ``kind`` selects how cells are rendered: ``relation`` and ``count`` hold
    ints, ``distance``/``longest`` hold numbers or UNREACHABLE, ``paths``
    holds sets of index tuples and ``letters`` holds sets of letters.
    """

    kind: str
    vertices: Tuple[str, ...]
    cells: List[List[Any]]
    routes: Tuple[Route, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in MATRIX_KINDS:
            raise ValueError(f"unknown report kind {self.kind!r}")


@dataclass(frozen=True)
class SubwordsReport:
    complexity: ComplexityReport
    word: Optional[str] = None
    matrix: Optional[List[List[frozenset]]] = None
    subwords: Optional[Tuple[str, ...]] = None
    with_singletons: bool = False


def _number(x: Any) -> Any:
    return None if x is UNREACHABLE else x


def _path_names(path: Sequence[int], names: Sequence[str]) -> List[str]:
    return [names[v] for v in path]


def _json_cell(kind: str, cell: Any) -> Any:
    if kind in ("distance", "longest"):
        return _number(cell)
    if kind == "letters":
        return sorted(cell)
    return cell


def _dump(obj: Any) -> bytes:
    return (json.dumps(obj, separators=(",", ":"), ensure_ascii=False) + "\n").encode("utf-8")


def _format_number(x: Any) -> str:
    return repr(x) if isinstance(x, float) else str(x)


def _text_cell(kind: str, cell: Any, names: Sequence[str]) -> str:
    if kind == "relation":
        return "1" if cell else "."
    if kind == "count":
        return str(cell) if cell else "."
    if kind == "distance":
        return "inf" if cell is UNREACHABLE else _format_number(cell)
    if kind == "longest":
        return "-inf" if cell is UNREACHABLE else _format_number(cell)
    if kind == "letters":
        return "{" + ",".join(sorted(cell)) + "}" if cell else "."
    if kind == "paths":
        if not cell:
            return "."
        return "{" + ",".join("-".join(_path_names(p, names)) for p in sorted(cell)) + "}"
    raise ValueError(kind)


def format_grid(row_labels: Sequence[str], col_labels: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    """Right-aligned grid with a header row of column labels."""
    label_width = max(len(s) for s in row_labels)
    widths = [max([len(col_labels[j])] + [len(r[j]) for r in rows]) for j in range(len(col_labels))]
    lines = [" " * label_width + "  " + "  ".join(c.rjust(w) for c, w in zip(col_labels, widths))]
    for label, r in zip(row_labels, rows):
        lines.append(label.rjust(label_width) + "  " + "  ".join(c.rjust(w) for c, w in zip(r, widths)))
    return "\n".join(line.rstrip() for line in lines) + "\n"


@singledispatch
def render(result: Any, mode: str = "text") -> bytes:
    """Serialize a report, graph or automaton; ``mode`` is ``"text"`` or ``"json"``."""
    raise TypeError(f"cannot render {type(result).__name__}")


def _check_mode(mode: str) -> None:
    if mode not in ("text", "json"):
        raise ValueError(f"unknown output mode {mode!r}")


@render.register
def _(result: MatrixReport, mode: str = "text") -> bytes:
    _check_mode(mode)
    names = result.vertices
    if mode == "json":
        doc: Dict[str, Any] = {"kind": result.kind, "vertices": list(names)}
        if result.kind == "paths":
            doc["paths"] = {
                f"{names[i]}->{names[j]}": [_path_names(p, names) for p in sorted(cell)]
                for i, row in enumerate(result.cells)
                for j, cell in enumerate(row)
            }
        else:
            doc["matrix"] = [[_json_cell(result.kind, c) for c in row] for row in result.cells]
        if result.routes:
            doc["routes"] = [
                {"from": r.source, "to": r.target, "distance": _number(r.distance), "path": list(r.vertices)}
                for r in result.routes
            ]
        return _dump(doc)
    rows = [[_text_cell(result.kind, c, names) for c in row] for row in result.cells]
    out = format_grid(names, names, rows)
    for r in result.routes:
        if r.vertices:
            out += f"path {r.source} -> {r.target} (distance {_format_number(r.distance)}): {' '.join(r.vertices)}\n"
        else:
            out += f"path {r.source} -> {r.target}: unreachable\n"
    return out.encode("utf-8")


def _complexity_doc(c: ComplexityReport) -> Dict[str, Any]:
    doc: Dict[str, Any] = {
        "kind": "subwords",
        "n": c.n,
        "gaps": list(c.gaps),
        "K": c.K,
        "K_without_singletons": c.nontrivial,
    }
    if c.W is not None:
        doc["W"] = c.W
    if c.R is not None:
        doc["R"] = c.R
    return doc


def _complexity_text(c: ComplexityReport, labels: Sequence[str]) -> str:
    gaps = "{" + ",".join(map(str, c.gaps)) + "}"
    out = f"n = {c.n}\nM = {gaps}\nK = {c.K}\nK without singletons = {c.nontrivial}\n"
    for name, matrix in (("W", c.W), ("R", c.R)):
        if matrix is not None:
            rows = [[str(x) if x else "." for x in row] for row in matrix]
            out += f"\n{name}:\n" + format_grid(labels, labels, rows)
    return out


@render.register
def _(result: ComplexityReport, mode: str = "text") -> bytes:
    return render(SubwordsReport(result), mode)


@render.register
def _(result: SubwordsReport, mode: str = "text") -> bytes:
    _check_mode(mode)
    c = result.complexity
    word = result.word
    key = (lambda s: [word.index(ch) for ch in s]) if word else None
    if mode == "json":
        doc = _complexity_doc(c)
        if word is not None:
            doc["word"] = word
        if result.matrix is not None:
            doc["matrix"] = [[sorted(cell, key=key) for cell in row] for row in result.matrix]
        if result.subwords is not None:
            doc["with_singletons"] = result.with_singletons
            doc["subwords"] = list(result.subwords)
        return _dump(doc)
    labels = list(word) if word else [str(i) for i in range(1, c.n + 1)]
    out = _complexity_text(c, labels)
    if result.matrix is not None:
        rows = [["{" + ",".join(sorted(cell, key=key)) + "}" if cell else "." for cell in row]
                for row in result.matrix]
        out += "\nsubword matrix:\n" + format_grid(labels, labels, rows)
    if result.subwords is not None:
        label = "M-subwords" if result.with_singletons else "M-subwords of length >= 2"
        out += f"\n{label} ({len(result.subwords)}): {' '.join(result.subwords)}\n"
    return out.encode("utf-8")


@render.register
def _(result: GraphDocument, mode: str = "text") -> bytes:
    _check_mode(mode)
    if mode == "json":
        edges = []
        for e in result.edges:
            item: Dict[str, Any] = {"from": e.source, "to": e.target}
            if e.weight is not None:
                item["weight"] = e.weight
            edges.append(item)
        return _dump({"vertices": list(result.vertices), "edges": edges})
    default_names = tuple(str(i) for i in range(1, result.n + 1))
    header = str(result.n) if result.vertices == default_names else "vertices: " + ",".join(result.vertices)
    lines = [header]
    for e in result.edges:
        parts = [e.source, e.target]
        if e.weight is not None:
            parts.append(_format_number(e.weight))
        lines.append(" ".join(parts))
    return ("\n".join(lines) + "\n").encode("utf-8")


@render.register
def _(result: TransitionTable, mode: str = "text") -> bytes:
    _check_mode(mode)
    order = {s: i for i, s in enumerate(result.states)}
    letter_order = {a: i for i, a in enumerate(result.alphabet)}
    keys = sorted(result.transitions, key=lambda k: (order[k[0]], letter_order[k[1]]))
    if mode == "json":
        transitions = [
            {"from": s, "on": a, "to": sorted(result.transitions[(s, a)], key=order.__getitem__)}
            for s, a in keys
        ]
        return _dump({"states": list(result.states), "alphabet": list(result.alphabet),
                      "transitions": transitions})
    rows = []
    for s in result.states:
        row = []
        for a in result.alphabet:
            targets = sorted(result.delta(s, a), key=order.__getitem__)
            row.append("{" + ",".join(targets) + "}" if targets else ".")
        rows.append(row)
    return format_grid(result.states, result.alphabet, rows).encode("utf-8")
