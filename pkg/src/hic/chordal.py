"""Homotopy type of r-independence complexes of chordal graphs.

Pick a simplicial vertex ``v``.  Its r-supports all induce connected
subgraphs and each one's closed neighbourhood swallows ``N(v)``, so the
complex splits as a wedge over the supports ``S`` of r-fold suspensions of
the complex of ``G - N[S]``.  Every residual is again chordal, so the
recursion bottoms out at the empty graph (the complex ``{∅}``) or at a graph
with a component of at most ``r`` vertices (a cone, hence contractible).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .domination import SupportFamily, supports
from .graph import (
    Graph,
    GraphError,
    chordality,
    connected_components,
    delete_closed_neighborhood,
    second_neighborhood,
    simplicial_vertices,
)
from .homotopy import CONTRACTIBLE, EMPTY, HomotopyType, suspend, wedge_combine

__all__ = [
    "DecompositionReport",
    "DecompositionError",
    "NotChordalError",
    "EngineBudgetExceeded",
    "EngineLimits",
    "TraceNode",
    "DecompositionTrace",
    "check_decomposition_hypotheses",
    "decompose_at_vertex",
    "chordal_homotopy_type",
    "replay_trace",
    "low_degree_condition",
    "degree_refinement_hash",
]

DEFAULT_MAX_NODES = 1_000_000


class DecompositionError(ValueError):
    """The support hypotheses fail at the chosen vertex."""


class NotChordalError(ValueError):
    def __init__(self, witness):
        super().__init__(f"graph is not chordal; chordless cycle {list(witness)}")
        self.witness = tuple(witness)


class EngineBudgetExceeded(RuntimeError):
    def __init__(self, message, trace: "DecompositionTrace"):
        super().__init__(message)
        self.trace = trace


@dataclass(frozen=True)
class EngineLimits:
    max_nodes: int = DEFAULT_MAX_NODES


@dataclass(frozen=True)
class DecompositionReport:
    v: int
    r: int
    family: SupportFamily

    @property
    def applicable(self) -> bool:
        return self.family.connected and self.family.dominating

    def to_dict(self) -> dict:
        d = self.family.to_dict()
        d["applicable"] = self.applicable
        return d


def check_decomposition_hypotheses(G: Graph, v: int, r: int) -> DecompositionReport:
    if r < 1:
        raise GraphError("r must be >= 1")
    return DecompositionReport(v, r, supports(G, v, r))


def decompose_at_vertex(G: Graph, v: int, r: int) -> list[tuple[tuple[int, ...], Graph, tuple[int, ...]]]:
    """``(S, G - N[S], index map)`` for every r-support ``S`` of ``v``.

    Raises :class:`DecompositionError` unless every support is connected and
    dominates ``N(v)``.
    """
    report = check_decomposition_hypotheses(G, v, r)
    if not report.applicable:
        bad = next(
            s.vertices for s in report.family.sets
            if not (s.induced_connected and s.dominates_neighborhood)
        )
        raise DecompositionError(
            f"supports of vertex {v} for r={r} fail the hypotheses (e.g. {list(bad)})"
        )
    out = []
    for S in report.family.vertex_sets():
        H, index = delete_closed_neighborhood(G, S)
        out.append((S, H, index))
    return out


# ---------------------------------------------------------------------------
# trace

@dataclass
class TraceNode:
    """One call of the recursion.

    ``kind`` is ``empty`` (no vertices), ``small_component`` (a component of
    at most r vertices), ``memo`` (answer reused) or ``split``.  For splits,
    ``supports[i]`` produced ``children[i]``, expressed in this node's
    vertex labels.
    """

    n: int
    edges: list
    kind: str = ""
    vertex: int | None = None
    supports: list = field(default_factory=list)
    children: list = field(default_factory=list)
    result: HomotopyType | None = None

    def to_dict(self) -> dict:
        d = {"n": self.n, "edges": [list(e) for e in self.edges], "kind": self.kind}
        if self.kind == "split":
            d["vertex"] = self.vertex
            d["branches"] = [
                {"support": list(S), "residual": c.to_dict()}
                for S, c in zip(self.supports, self.children)
            ]
        d["result"] = None if self.result is None else self.result.to_dict()
        return d


@dataclass
class DecompositionTrace:
    root: TraceNode
    r: int
    nodes: int = 0
    memo_hits: int = 0

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "nodes": self.nodes,
            "memo_hits": self.memo_hits,
            "root": self.root.to_dict(),
        }


def replay_trace(node: TraceNode, r: int) -> HomotopyType:
    """Recombine a trace bottom-up; must reproduce ``node.result``."""
    if node.kind == "split":
        return wedge_combine(suspend(replay_trace(c, r), r) for c in node.children)
    if node.kind == "empty":
        return EMPTY
    if node.kind == "small_component":
        return CONTRACTIBLE
    return node.result


# ---------------------------------------------------------------------------
# engine

def degree_refinement_hash(G: Graph, rounds: int = 3) -> int:
    """Isomorphism-invariant hash from iterated neighbour-degree multisets."""
    colour = [G.degree(v) for v in G.vertices]
    for _ in range(rounds):
        colour = [hash((colour[v], tuple(sorted(colour[u] for u in G.adj[v]))))
                  for v in G.vertices]
    return hash((G.n, G.m, tuple(sorted(colour))))


def chordal_homotopy_type(
    G: Graph,
    r: int,
    limits: EngineLimits | None = None,
    choose: Literal["min", "max"] = "min",
) -> tuple[HomotopyType, DecompositionTrace]:
    """Exact homotopy type of ``Ind_r(G)`` for chordal ``G``.

    ``choose`` selects the smallest- or largest-id simplicial vertex at each
    step; the answer must not depend on it.
    """
    if r < 1:
        raise GraphError("r must be >= 1")
    cert = chordality(G)
    if not cert.chordal:
        raise NotChordalError(cert.witness)
    limits = limits or EngineLimits()
    pick = min if choose == "min" else max

    # bucket -> [(graph, answer)]; equality is confirmed on the stored graph
    memo: dict[int, list[tuple[Graph, HomotopyType]]] = {}
    root = TraceNode(G.n, G.sorted_edges())
    trace = DecompositionTrace(root, r)

    def solve(H: Graph, node: TraceNode) -> HomotopyType:
        trace.nodes += 1
        if trace.nodes > limits.max_nodes:
            raise EngineBudgetExceeded(
                f"recursion exceeded max_nodes={limits.max_nodes}", trace
            )
        if H.n == 0:
            node.kind, node.result = "empty", EMPTY
            return EMPTY
        if any(len(c) <= r for c in connected_components(H)):
            node.kind, node.result = "small_component", CONTRACTIBLE
            return CONTRACTIBLE
        bucket = memo.setdefault(degree_refinement_hash(H), [])
        for K, T in bucket:
            if K == H:
                trace.memo_hits += 1
                node.kind, node.result = "memo", T
                return T
        v = pick(simplicial_vertices(H))
        node.kind, node.vertex = "split", v
        parts = []
        for S, R, _ in decompose_at_vertex(H, v, r):
            child = TraceNode(R.n, R.sorted_edges())
            node.supports.append(S)
            node.children.append(child)
            parts.append(suspend(solve(R, child), r))
        T = wedge_combine(parts)
        node.result = T
        bucket.append((H, T))
        return T

    return solve(G, root), trace


def low_degree_condition(G: Graph, v: int, r: int) -> bool:
    """Every neighbour of ``v`` is adjacent to every vertex at distance 2,
    and ``r`` exceeds the degree of ``v``."""
    G.check_vertices([v])
    if r <= G.degree(v):
        return False
    far = second_neighborhood(G, v)
    return all(b in G.adj[a] for a in G.adj[v] for b in far)
