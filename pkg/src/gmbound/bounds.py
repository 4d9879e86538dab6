"""Complexity upper bounds for validated decomposition graphs.

Three evaluators cover increasingly general graphs:

  bound_regular   no H-edges at all;
  bound_tree      every H-edge fits into a single spanning tree (Phi = 0);
  bound_general   arbitrary graphs, paying +1 for each H-edge left outside
                  an optimal spanning tree.

All three share the same skeleton: a cycle term 5(|E| - |V| + 1), one term
cf_sum(|beta|, |delta|) - 1 per non-H edge, a vertex term
3(d + r + 2h - 2) + sum(cf_sum(p, q) - 2) per piece, and a penalty f at
each vertex measuring how far b lies from a window [m, M] determined by
the degree bookkeeping.  The tree and general evaluators minimize the
penalty sum over sign assignments on the H-edges (and, in the general
case, over the optimal trees and a six-valued assignment on the non-tree
H-edges); the minimization is exhaustive, capped, and deterministic, with
ties resolved by enumeration order so reports are byte-reproducible.

Windows always satisfy m < M, m <= 1, M >= -1 on class-S data; f checks
this on every call instead of assuming it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .farey import cf_sum, matrix_complexity
from .gl2 import is_plus_minus_h
from .graph import DecompositionGraph, Edge, degree_stats
from .seifert import handle_count
from .spanning import CapExceeded, SpanningTree, capital_phi, optimal_trees, DEFAULT_TREE_CAP

DEFAULT_ASSIGNMENT_CAP = 2**20

PSI_VALUES = ("+", "-")
PSI_PRIME_VALUES = ("++", "+", "+-", "-+", "-", "--")

# weighted degree increments of a non-tree H-edge, per assignment value:
# value -> ((source d+, source d-), (target d+, target d-))
_PSI_PRIME_WEIGHTS = {
    "++": ((2, 0), (1, 0)),
    "+": ((1, 0), (2, 0)),
    "+-": ((1, 0), (0, 1)),
    "-+": ((0, 1), (1, 0)),
    "-": ((0, 1), (0, 2)),
    "--": ((0, 2), (0, 1)),
}


class TheoremInapplicable(ValueError):
    """The requested evaluator does not apply to this graph."""


def f(m: int, M: int, b: int) -> int:
    """Distance of b from the window [m, M]: m - b below, b - M above, else 0.

    Requires m < M, m <= 1 and M >= -1; violations signal an inadmissible
    piece upstream and are rejected rather than clamped.
    """
    if not (m < M and m <= 1 and M >= -1):
        raise ValueError(f"invalid penalty window m={m}, M={M}; need m < M, m <= 1, M >= -1")
    if b < m:
        return m - b
    if b > M:
        return b - M
    return 0


# ---------------------------------------------------------------------------
# report structure
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VertexTerms:
    """Per-vertex summands: 3(d + r + 2h - 2), fibre sum, window penalty."""

    base: int
    fibre_sum: int
    penalty: int

    @property
    def total(self) -> int:
        return self.base + self.fibre_sum + self.penalty


@dataclass(frozen=True)
class BoundReport:
    """A bound together with its full term breakdown and witnesses.

    total always equals cycle_term + phi_term + the edge terms + the vertex
    terms; min_penalty is the winning penalty sum and equals the sum of the
    per-vertex penalty entries.  Witness fields are None when the evaluator
    had nothing to choose (regular has no assignment, tree no tree).
    """

    theorem: str
    total: int
    cycle_term: int
    phi_term: int
    edge_terms: tuple[tuple[str, int], ...]
    vertex_terms: tuple[tuple[str, VertexTerms], ...]
    min_penalty: int
    witness_tree: tuple[str, ...] | None
    witness_psi: tuple[tuple[str, str], ...] | None
    witness_psi_prime: tuple[tuple[str, str], ...] | None

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "total": self.total,
            "terms": {
                "cycle": self.cycle_term,
                "phi": self.phi_term,
                "edges": [{"id": eid, "value": val} for eid, val in self.edge_terms],
                "vertices": [
                    {"id": vid, "base": t.base, "fibres": t.fibre_sum, "penalty": t.penalty}
                    for vid, t in self.vertex_terms
                ],
            },
            "min_penalty": self.min_penalty,
            "witness": {
                "tree": list(self.witness_tree) if self.witness_tree is not None else None,
                "psi": dict(self.witness_psi) if self.witness_psi is not None else None,
                "psi_prime": dict(self.witness_psi_prime) if self.witness_psi_prime is not None else None,
            },
        }


# ---------------------------------------------------------------------------
# shared pieces
# ---------------------------------------------------------------------------


def _split_edges(g: DecompositionGraph) -> tuple[list[Edge], list[Edge]]:
    """(H-edges, non-H edges), both in id order."""
    h_edges = [e for e in g.edges if is_plus_minus_h(e.matrix)]
    rest = [e for e in g.edges if not is_plus_minus_h(e.matrix)]
    return h_edges, rest


def _cycle_term(g: DecompositionGraph) -> int:
    return 5 * (len(g.edges) - len(g.vertices) + 1)


def _edge_terms(edges: list[Edge]) -> tuple[tuple[str, int], ...]:
    return tuple((e.id, matrix_complexity(e.matrix)) for e in edges)


def _vertex_static(g: DecompositionGraph) -> dict[str, tuple[int, int, int, int, int]]:
    """Per vertex: (r, h, b, base term, fibre sum)."""
    stats = degree_stats(g)
    out = {}
    for vid, s in g.vertices.items():
        r = len(s.fibres)
        h = handle_count(s)
        base = 3 * (stats[vid].d + r + 2 * h - 2)
        fib = sum(cf_sum(p, q) - 2 for p, q in s.fibres)
        out[vid] = (r, h, s.b, base, fib)
    return out


def _penalties(
    g: DecompositionGraph,
    stats,
    static: dict[str, tuple[int, int, int, int, int]],
    plus_extra: dict[str, int],
    minus_extra: dict[str, int],
) -> tuple[int, dict[str, int]]:
    """Penalty sum and per-vertex penalties for one degree bookkeeping."""
    pens = {}
    total = 0
    for vid in g.vertices:
        r, h, b, _, _ = static[vid]
        m = 1 - r - h - stats[vid].d_minus - minus_extra.get(vid, 0)
        M = h + stats[vid].d_plus + plus_extra.get(vid, 0) - 1
        pen = f(m, M, b)
        pens[vid] = pen
        total += pen
    return total, pens


def _psi_extras(h_edges: list[Edge], values: tuple[str, ...]) -> tuple[dict[str, int], dict[str, int]]:
    """d+/d- increments from a sign assignment; a loop hits its vertex twice."""
    plus: dict[str, int] = {}
    minus: dict[str, int] = {}
    for e, val in zip(h_edges, values):
        bucket = plus if val == "+" else minus
        bucket[e.src] = bucket.get(e.src, 0) + 1
        bucket[e.dst] = bucket.get(e.dst, 0) + 1
    return plus, minus


def _assemble(
    g: DecompositionGraph,
    theorem: str,
    phi_term: int,
    edge_terms: tuple[tuple[str, int], ...],
    static: dict[str, tuple[int, int, int, int, int]],
    pens: dict[str, int],
    witness_tree: tuple[str, ...] | None,
    witness_psi: tuple[tuple[str, str], ...] | None,
    witness_psi_prime: tuple[tuple[str, str], ...] | None,
) -> BoundReport:
    cycle = _cycle_term(g)
    vertex_terms = tuple(
        (vid, VertexTerms(static[vid][3], static[vid][4], pens[vid])) for vid in g.vertices
    )
    total = (
        cycle
        + phi_term
        + sum(v for _, v in edge_terms)
        + sum(t.total for _, t in vertex_terms)
    )
    return BoundReport(
        theorem=theorem,
        total=total,
        cycle_term=cycle,
        phi_term=phi_term,
        edge_terms=edge_terms,
        vertex_terms=vertex_terms,
        min_penalty=sum(pens.values()),
        witness_tree=witness_tree,
        witness_psi=witness_psi,
        witness_psi_prime=witness_psi_prime,
    )


# ---------------------------------------------------------------------------
# the three evaluators
# ---------------------------------------------------------------------------


def bound_regular(g: DecompositionGraph) -> BoundReport:
    """Bound for graphs without H-edges; no minimization is involved."""
    h_edges, rest = _split_edges(g)
    if h_edges:
        raise TheoremInapplicable(
            f"regular evaluator needs a graph without +-H edges, found {[e.id for e in h_edges]}")
    static = _vertex_static(g)
    _, pens = _penalties(g, degree_stats(g), static, {}, {})
    return _assemble(g, "regular", 0, _edge_terms(rest), static, pens, None, None, None)


def bound_tree(g: DecompositionGraph, assignment_cap: int = DEFAULT_ASSIGNMENT_CAP) -> BoundReport:
    """Bound for graphs whose H-edges all fit in one spanning tree (Phi = 0).

    Minimizes the penalty sum over all sign assignments on the H-edges;
    a + on an H-edge raises M by one at both ends, a - lowers m by one at
    both ends.  The first assignment attaining the minimum (in + before -
    order over id-sorted edges) is reported as the witness.
    """
    if capital_phi(g) != 0:
        raise TheoremInapplicable("tree evaluator needs every +-H edge inside one spanning tree")
    h_edges, rest = _split_edges(g)
    count = 2 ** len(h_edges)
    if count > assignment_cap:
        raise CapExceeded(
            f"sign assignment search needs {count} > cap {assignment_cap} assignments",
            needed=count)

    static = _vertex_static(g)
    stats = degree_stats(g)
    best: tuple[int, dict[str, int], tuple[str, ...]] | None = None
    for values in itertools.product(PSI_VALUES, repeat=len(h_edges)):
        plus, minus = _psi_extras(h_edges, values)
        total, pens = _penalties(g, stats, static, plus, minus)
        if best is None or total < best[0]:
            best = (total, pens, values)
    assert best is not None  # the empty assignment always exists
    _, pens, values = best
    psi = tuple((e.id, v) for e, v in zip(h_edges, values))
    return _assemble(g, "tree", 0, _edge_terms(rest), static, pens, None, psi, None)


def bound_general(
    g: DecompositionGraph,
    tree_cap: int = DEFAULT_TREE_CAP,
    assignment_cap: int = DEFAULT_ASSIGNMENT_CAP,
) -> BoundReport:
    """Bound for arbitrary graphs: Phi(G) joins the sum, and the penalty is
    minimized over optimal spanning trees, sign assignments on tree H-edges
    and six-valued assignments on the H-edges outside the tree.

    Non-tree H-edge weights: ++ adds (2, 1) to the d+ of (source, target),
    + adds (1, 2); +- adds 1 to the source d+ and 1 to the target d-;
    -+ mirrors +-; - and -- mirror + and ++ on d-.  Ties are broken by
    enumeration order: trees lexicographically, then psi (+ before -),
    then psi' in the order ++, +, +-, -+, -, --.
    """
    phi_value = capital_phi(g)
    trees = optimal_trees(g, cap=tree_cap)
    h_edges, rest = _split_edges(g)
    static = _vertex_static(g)
    stats = degree_stats(g)

    best: tuple[int, dict[str, int], SpanningTree, tuple, tuple] | None = None
    for tree in trees:
        in_tree = set(tree.edge_ids)
        tree_h = [e for e in h_edges if e.id in in_tree]
        outside_h = [e for e in h_edges if e.id not in in_tree]
        count = (2 ** len(tree_h)) * (6 ** len(outside_h))
        if count > assignment_cap:
            raise CapExceeded(
                f"assignment search needs {count} > cap {assignment_cap} assignments"
                f" for tree {tree.edge_ids}",
                needed=count)
        for psi_vals in itertools.product(PSI_VALUES, repeat=len(tree_h)):
            psi_plus, psi_minus = _psi_extras(tree_h, psi_vals)
            for psip_vals in itertools.product(PSI_PRIME_VALUES, repeat=len(outside_h)):
                plus = dict(psi_plus)
                minus = dict(psi_minus)
                for e, val in zip(outside_h, psip_vals):
                    (sp, sm), (tp, tm) = _PSI_PRIME_WEIGHTS[val]
                    plus[e.src] = plus.get(e.src, 0) + sp
                    minus[e.src] = minus.get(e.src, 0) + sm
                    plus[e.dst] = plus.get(e.dst, 0) + tp
                    minus[e.dst] = minus.get(e.dst, 0) + tm
                total, pens = _penalties(g, stats, static, plus, minus)
                if best is None or total < best[0]:
                    best = (total, pens, tree, psi_vals, psip_vals)

    assert best is not None  # optimal_trees yields at least one tree
    _, pens, tree, psi_vals, psip_vals = best
    in_tree = set(tree.edge_ids)
    tree_h = [e for e in h_edges if e.id in in_tree]
    outside_h = [e for e in h_edges if e.id not in in_tree]
    psi = tuple((e.id, v) for e, v in zip(tree_h, psi_vals))
    psi_prime = tuple((e.id, v) for e, v in zip(outside_h, psip_vals))
    return _assemble(
        g, "general", phi_value, _edge_terms(rest), static, pens,
        tree.edge_ids, psi, psi_prime)


def best_bound(
    g: DecompositionGraph,
    tree_cap: int = DEFAULT_TREE_CAP,
    assignment_cap: int = DEFAULT_ASSIGNMENT_CAP,
) -> BoundReport:
    """Dispatch to the most specific applicable evaluator."""
    h_edges, _ = _split_edges(g)
    if not h_edges:
        return bound_regular(g)
    if capital_phi(g) == 0:
        return bound_tree(g, assignment_cap=assignment_cap)
    return bound_general(g, tree_cap=tree_cap, assignment_cap=assignment_cap)
