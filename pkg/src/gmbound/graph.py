"""Decomposition graphs: Seifert-labeled vertices glued along matrix edges.

A decomposition graph is a connected multigraph (loops and parallel edges
allowed) whose vertices carry SeifertData and whose directed edges carry
normalized determinant -1 matrices.  An edge from v to w means a boundary
torus of the piece at v is glued to one of the piece at w; the direction
fixes which way the matrix acts, and reversing an edge would replace the
matrix by its (re-normalized) inverse.

Edges with matrix +-H play a special role in the bound evaluators and are
referred to as H-edges throughout; degree_stats splits vertex degrees
accordingly.  The JSON document format accepted here is strict: integer
entries only, no unknown keys, unique non-empty ids.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

from .gl2 import Gl2Matrix, is_normalized, is_plus_minus_h, normalize
from .seifert import SeifertData, fibre_problems, validate_class_s

# ---------------------------------------------------------------------------
# data model
# ---------------------------------------------------------------------------


class GraphFormatError(ValueError):
    """The document does not parse as a decomposition graph."""


@dataclass(frozen=True)
class Edge:
    id: str
    src: str
    dst: str
    matrix: Gl2Matrix

    @property
    def is_loop(self) -> bool:
        return self.src == self.dst


@dataclass(frozen=True)
class DecompositionGraph:
    """Vertices keyed by id plus an id-sorted tuple of edges; immutable."""

    vertices: dict[str, SeifertData]
    edges: tuple[Edge, ...]


def build_graph(vertices: dict[str, SeifertData], edges) -> DecompositionGraph:
    """Assemble a graph, sorting vertices and edges by id.

    Only structural soundness is enforced here (unique non-empty ids,
    endpoints that exist); admissibility is validate()'s job.
    """
    for vid in vertices:
        if not isinstance(vid, str) or not vid:
            raise GraphFormatError("vertex ids must be non-empty strings")
    edges = list(edges)
    seen = set()
    for e in edges:
        if not isinstance(e.id, str) or not e.id:
            raise GraphFormatError("edge ids must be non-empty strings")
        if e.id in seen:
            raise GraphFormatError(f"duplicate edge id {e.id!r}")
        seen.add(e.id)
        for end in (e.src, e.dst):
            if end not in vertices:
                raise GraphFormatError(f"edge {e.id!r} references unknown vertex {end!r}")
    ordered = {vid: vertices[vid] for vid in sorted(vertices)}
    return DecompositionGraph(ordered, tuple(sorted(edges, key=lambda e: e.id)))


# ---------------------------------------------------------------------------
# degrees
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DegreeStats:
    """Degree split at a vertex: d = d_plus + d_minus + d_zero.

    d_plus counts outgoing non-H ends, d_minus incoming non-H ends, and
    d_zero all H-edge ends regardless of direction.  A loop contributes
    both of its ends to the same vertex.
    """

    d: int
    d_plus: int
    d_minus: int
    d_zero: int


def degree(g: DecompositionGraph, vid: str) -> int:
    return sum((e.src == vid) + (e.dst == vid) for e in g.edges)


def degree_stats(g: DecompositionGraph) -> dict[str, DegreeStats]:
    plus = dict.fromkeys(g.vertices, 0)
    minus = dict.fromkeys(g.vertices, 0)
    zero = dict.fromkeys(g.vertices, 0)
    for e in g.edges:
        if is_plus_minus_h(e.matrix):
            zero[e.src] += 1
            zero[e.dst] += 1
        else:
            plus[e.src] += 1
            minus[e.dst] += 1
    return {
        vid: DegreeStats(plus[vid] + minus[vid] + zero[vid], plus[vid], minus[vid], zero[vid])
        for vid in g.vertices
    }


def _connected(g: DecompositionGraph) -> bool:
    if not g.vertices:
        return False
    adjacency = {vid: set() for vid in g.vertices}
    for e in g.edges:
        adjacency[e.src].add(e.dst)
        adjacency[e.dst].add(e.src)
    start = next(iter(g.vertices))
    seen = {start}
    stack = [start]
    while stack:
        for nxt in adjacency[stack.pop()]:
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return len(seen) == len(g.vertices)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    clause: str
    subject: str
    message: str
    severity: str = "error"  # "error" or "note"


def _is_two_half_fibred_disk(s: SeifertData) -> bool:
    """The piece (0, 1, (2,1), (2,1), b): disk base with two (2, 1) fibres."""
    return s.g == 0 and s.fibres == ((2, 1), (2, 1))


def _matches_shifted_h(m: Gl2Matrix) -> int | None:
    """beta if m = +-(1 beta / 1 beta-1) for some beta > 1, else None."""
    for cand in (m, -m):
        if cand.beta > 1 and cand.alpha == 1 and cand.gamma == 1 and cand.delta == cand.beta - 1:
            return cand.beta
    return None


def _matches_shifted_h_transposed(m: Gl2Matrix) -> int | None:
    """beta if m = +-(beta-1 beta / 1 1) for some beta > 1, else None."""
    for cand in (m, -m):
        if cand.beta > 1 and cand.alpha == cand.beta - 1 and cand.gamma == 1 and cand.delta == 1:
            return cand.beta
    return None


def validate(g: DecompositionGraph) -> list[Violation]:
    """Collect every admissibility violation; an empty error list means valid.

    Checks, in order: the graph is non-trivial (at least one edge) and
    connected; every edge matrix has determinant -1, beta != 0 and is
    normalized; every vertex has well-formed fibre data and passes the
    class-S inequality for its degree; and the two small-graph exclusions
    (i) and (ii)(a)-(c).  Loops are admitted and only flagged as notes.
    """
    out: list[Violation] = []

    if not g.edges:
        out.append(Violation("non-trivial", "graph", "graph must contain at least one edge"))
    if not _connected(g):
        out.append(Violation("connectivity", "graph", "graph must be connected"))

    for e in g.edges:
        if e.matrix.det != -1:
            out.append(Violation("normalization", e.id, f"matrix determinant must be -1, got {e.matrix.det}"))
        elif e.matrix.beta == 0:
            out.append(Violation(
                "normalization", e.id,
                "matrix has beta = 0: the gluing matches fibres, so the decomposition is non-minimal"))
        elif not is_normalized(e.matrix):
            out.append(Violation("normalization", e.id, "matrix is not normalized"))
        if e.is_loop:
            out.append(Violation("loops", e.id, "loop edge (admitted; never part of a spanning tree)", "note"))

    for vid, s in g.vertices.items():
        for msg in fibre_problems(s):
            out.append(Violation("seifert-data", vid, msg))
        for msg in validate_class_s(s, degree(g, vid)):
            out.append(Violation("class-S", vid, msg))

    # exclusion (i): an H-edge may not touch a degree-1 piece (0,1,(2,1),(2,1),-1)
    for e in g.edges:
        if not is_plus_minus_h(e.matrix):
            continue
        for vid in {e.src, e.dst}:
            s = g.vertices[vid]
            if _is_two_half_fibred_disk(s) and s.b == -1 and degree(g, vid) == 1:
                out.append(Violation(
                    "(i)", e.id,
                    f"+-H gluing touches vertex {vid}, a (0,1,(2,1),(2,1),-1) piece"))

    # exclusion (ii): two pieces (0,1,(2,1),(2,1),b_i) joined by a single edge
    if len(g.vertices) == 2 and len(g.edges) == 1 and not g.edges[0].is_loop:
        e = g.edges[0]
        s1, s2 = g.vertices[e.src], g.vertices[e.dst]
        if _is_two_half_fibred_disk(s1) and _is_two_half_fibred_disk(s2):
            pair = (s1.b, s2.b)
            if is_plus_minus_h(e.matrix) and pair in ((0, 0), (-2, -2)):
                out.append(Violation(
                    "(ii)(a)", e.id, f"+-H gluing of two (2,1)(2,1) disk pieces with b = {pair}"))
            if _matches_shifted_h(e.matrix) is not None and pair == (-1, -2):
                out.append(Violation(
                    "(ii)(b)", e.id,
                    "+-(1 beta / 1 beta-1) gluing of two (2,1)(2,1) disk pieces with b = (-1, -2)"))
            if _matches_shifted_h_transposed(e.matrix) is not None and pair == (0, -1):
                out.append(Violation(
                    "(ii)(c)", e.id,
                    "+-(beta-1 beta / 1 1) gluing of two (2,1)(2,1) disk pieces with b = (0, -1)"))

    return out


def is_valid(g: DecompositionGraph) -> bool:
    return not any(v.severity == "error" for v in validate(g))


# ---------------------------------------------------------------------------
# normalization moves
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EdgeMove:
    """Record of the normalization moves applied to one edge."""

    edge_id: str
    k: int
    h: int


def normalize_edge(g: DecompositionGraph, edge_id: str) -> tuple[DecompositionGraph, EdgeMove]:
    """Normalize one edge matrix, shifting the endpoint b parameters.

    Replacing A by A * U^k adds k to b at the source; replacing A by U^h * A
    subtracts h from b at the target.  Both moves describe the same manifold,
    so bounds computed before and after must agree.  On a loop both shifts
    land on the same vertex, changing its b by k - h.
    """
    by_id = {e.id: e for e in g.edges}
    if edge_id not in by_id:
        raise ValueError(f"no edge with id {edge_id!r}")
    e = by_id[edge_id]
    new_matrix, k, h = normalize(e.matrix)
    vertices = dict(g.vertices)
    vertices[e.src] = replace(vertices[e.src], b=vertices[e.src].b + k)
    vertices[e.dst] = replace(vertices[e.dst], b=vertices[e.dst].b - h)
    edges = tuple(replace(x, matrix=new_matrix) if x.id == edge_id else x for x in g.edges)
    return DecompositionGraph(vertices, edges), EdgeMove(edge_id, k, h)


def normalize_all(g: DecompositionGraph) -> tuple[DecompositionGraph, list[EdgeMove]]:
    """Normalize every edge in id order; returns the new graph and the moves."""
    moves = []
    for e in g.edges:
        g, mv = normalize_edge(g, e.id)
        moves.append(mv)
    return g, moves


# ---------------------------------------------------------------------------
# JSON document format
# ---------------------------------------------------------------------------

_VERTEX_KEYS = {"id", "g", "fibres", "b"}
_EDGE_KEYS = {"id", "from", "to", "matrix"}


def _reject_float(text: str):
    raise GraphFormatError(f"fractional or non-finite numbers are not allowed: {text}")


def _as_int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise GraphFormatError(f"{where} must be an integer, got {value!r}")
    return value


def _as_str(value, where: str) -> str:
    if not isinstance(value, str) or not value:
        raise GraphFormatError(f"{where} must be a non-empty string, got {value!r}")
    return value


def _check_keys(obj: dict, allowed: set[str], where: str) -> None:
    if not isinstance(obj, dict):
        raise GraphFormatError(f"{where} must be an object")
    unknown = set(obj) - allowed
    if unknown:
        raise GraphFormatError(f"{where} has unknown keys: {sorted(unknown)}")
    missing = allowed - set(obj)
    if missing:
        raise GraphFormatError(f"{where} is missing keys: {sorted(missing)}")


def graph_from_json(text: str) -> DecompositionGraph:
    """Parse the strict JSON document format.

    Structural problems (wrong shapes, unknown keys, non-integer numbers,
    duplicate ids, dangling endpoint references, matrices outside GL2(Z))
    raise GraphFormatError; admissibility problems are left to validate().
    """
    try:
        doc = json.loads(text, parse_float=_reject_float, parse_constant=_reject_float)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from exc

    _check_keys(doc, {"vertices", "edges"}, "document")
    if not isinstance(doc["vertices"], list) or not isinstance(doc["edges"], list):
        raise GraphFormatError("'vertices' and 'edges' must be arrays")

    vertices: dict[str, SeifertData] = {}
    for item in doc["vertices"]:
        _check_keys(item, _VERTEX_KEYS, "vertex")
        vid = _as_str(item["id"], "vertex id")
        if vid in vertices:
            raise GraphFormatError(f"duplicate vertex id {vid!r}")
        raw = item["fibres"]
        if not isinstance(raw, list):
            raise GraphFormatError(f"vertex {vid!r}: fibres must be an array")
        fibres = []
        for pair in raw:
            if not isinstance(pair, list) or len(pair) != 2:
                raise GraphFormatError(f"vertex {vid!r}: each fibre must be a pair [p, q]")
            fibres.append((
                _as_int(pair[0], f"vertex {vid!r} fibre p"),
                _as_int(pair[1], f"vertex {vid!r} fibre q"),
            ))
        vertices[vid] = SeifertData(
            _as_int(item["g"], f"vertex {vid!r} genus"),
            tuple(fibres),
            _as_int(item["b"], f"vertex {vid!r} parameter b"),
        )

    edges = []
    for item in doc["edges"]:
        _check_keys(item, _EDGE_KEYS, "edge")
        eid = _as_str(item["id"], "edge id")
        rows = item["matrix"]
        if (not isinstance(rows, list) or len(rows) != 2
                or any(not isinstance(r, list) or len(r) != 2 for r in rows)):
            raise GraphFormatError(f"edge {eid!r}: matrix must be a 2x2 array")
        entries = [_as_int(x, f"edge {eid!r} matrix entry") for row in rows for x in row]
        try:
            matrix = Gl2Matrix(*entries)
        except ValueError as exc:
            raise GraphFormatError(f"edge {eid!r}: {exc}") from exc
        edges.append(Edge(eid, _as_str(item["from"], "edge source"),
                          _as_str(item["to"], "edge target"), matrix))

    return build_graph(vertices, edges)


def graph_to_json(g: DecompositionGraph) -> str:
    """Serialize canonically: ids sorted, fixed key order, two-space indent."""
    doc = {
        "vertices": [
            {"id": vid, "g": s.g, "fibres": [list(p) for p in s.fibres], "b": s.b}
            for vid, s in g.vertices.items()
        ],
        "edges": [
            {"id": e.id, "from": e.src, "to": e.dst, "matrix": e.matrix.rows()}
            for e in g.edges
        ],
    }
    return json.dumps(doc, indent=2) + "\n"
