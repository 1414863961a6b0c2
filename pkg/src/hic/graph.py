"""Finite simple graphs on vertices ``0..n-1``.

The :class:`Graph` type is immutable; every query returns fresh data.  Vertex
sets are passed around as any iterable of ints and returned as sorted tuples
or frozensets.
"""
from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "Graph",
    "GraphError",
    "INFINITE",
    "PeoCertificate",
    "parse_graph",
    "serialize_graph",
    "induced_subgraph",
    "delete_closed_neighborhood",
    "connected_components",
    "distance_to_set",
    "chordality",
    "simplicial_vertices",
    "closed_neighborhood",
    "open_neighborhood",
    "second_neighborhood",
]

# Unreachable distance.  Compares greater than every int.
INFINITE = math.inf


class GraphError(ValueError):
    """Invalid graph data or an out-of-range vertex."""


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with vertex set ``range(n)``.

    Edges are stored as ``(min, max)`` pairs.  Construct with any iterable of
    pairs; duplicates (in either orientation) collapse, self-loops raise.
    """

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        norm = set()
        for e in self.edges:
            u, v = e
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            norm.add(_norm_edge(u, v))
        object.__setattr__(self, "edges", frozenset(norm))

    @cached_property
    def adj(self) -> tuple[frozenset, ...]:
        nbrs = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def adj_mask(self) -> tuple[int, ...]:
        """Neighbourhoods as bitmasks (bit ``u`` set iff ``u`` is adjacent)."""
        return tuple(sum(1 << u for u in nb) for nb in self.adj)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def check_vertices(self, vs: Iterable[int]) -> frozenset:
        out = frozenset(int(v) for v in vs)
        for v in out:
            if not 0 <= v < self.n:
                raise GraphError(f"vertex {v} out of range for n={self.n}")
        return out

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


# ---------------------------------------------------------------------------
# edge-list text format

_COMMENT = re.compile(r"^\s*#")


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: ``n m`` header then ``m`` lines ``u v``.

    Blank lines and lines starting with ``#`` are ignored.  Errors carry the
    1-based line number of the offending line.
    """
    header = None
    edges: list[tuple[int, int]] = []
    expected = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip() or _COMMENT.match(raw):
            continue
        parts = raw.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: expected two integers, got {raw!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphError(f"line {lineno}: negative header value")
            header = (a, b)
            expected = b
            continue
        if len(edges) >= expected:
            raise GraphError(f"line {lineno}: more than {expected} edge lines")
        n = header[0]
        if a == b:
            raise GraphError(f"line {lineno}: self-loop at vertex {a}")
        if not (0 <= a < n and 0 <= b < n):
            raise GraphError(f"line {lineno}: vertex id out of range 0..{n - 1}")
        edges.append((a, b))
    if header is None:
        raise GraphError("missing 'n m' header line")
    if len(edges) != expected:
        raise GraphError(f"expected {expected} edge lines, found {len(edges)}")
    return Graph(header[0], frozenset(edges))


def serialize_graph(G: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{G.n} {G.m}")
    lines.extend(f"{u} {v}" for u, v in G.sorted_edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# neighbourhoods and subgraphs

def open_neighborhood(G: Graph, S: Iterable[int]) -> frozenset:
    """``N(S)``: vertices adjacent to some member of ``S`` (may meet ``S``)."""
    out = set()
    for s in G.check_vertices(S):
        out |= G.adj[s]
    return frozenset(out)


def closed_neighborhood(G: Graph, S: Iterable[int]) -> frozenset:
    S = G.check_vertices(S)
    return open_neighborhood(G, S) | S


def second_neighborhood(G: Graph, v: int) -> frozenset:
    """Vertices at distance exactly 2 from ``v``."""
    d = bfs_distances(G, [v])
    return frozenset(u for u, du in enumerate(d) if du == 2)


def induced_subgraph(G: Graph, A: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return ``G[A]`` relabelled to ``0..|A|-1`` and the map new id -> old id.

    Vertices keep their relative order.
    """
    keep = sorted(G.check_vertices(A))
    index = {old: new for new, old in enumerate(keep)}
    edges = [
        (index[u], index[v]) for u, v in G.edges if u in index and v in index
    ]
    return Graph(len(keep), frozenset(edges)), tuple(keep)


def delete_closed_neighborhood(G: Graph, S: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """``G - N[S]`` with its index map back into ``G``."""
    removed = closed_neighborhood(G, S)
    return induced_subgraph(G, (v for v in G.vertices if v not in removed))


def connected_components(G: Graph, within: Iterable[int] | None = None) -> list[tuple[int, ...]]:
    """Components as sorted tuples, ordered by smallest vertex.

    With ``within`` the components of the induced subgraph on that set are
    returned, in original labels.
    """
    allowed = set(G.vertices) if within is None else set(G.check_vertices(within))
    seen: set[int] = set()
    comps = []
    for s in sorted(allowed):
        if s in seen:
            continue
        seen.add(s)
        stack = [s]
        comp = []
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in G.adj[x]:
                if y in allowed and y not in seen:
                    seen.add(y)
                    stack.append(y)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected_set(G: Graph, A: Iterable[int]) -> bool:
    A = list(A)
    if not A:
        return False
    return len(connected_components(G, A)) == 1


def bfs_distances(G: Graph, sources: Iterable[int]) -> list:
    """Multi-source BFS distances; unreachable vertices get ``INFINITE``."""
    dist: list = [INFINITE] * G.n
    queue = deque()
    for s in G.check_vertices(sources):
        dist[s] = 0
        queue.append(s)
    while queue:
        x = queue.popleft()
        for y in G.adj[x]:
            if dist[y] is INFINITE:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def distance_to_set(G: Graph, v: int, X: Iterable[int]):
    """``d(v, X)``: 0 when ``v`` is in ``X``, ``INFINITE`` when unreachable."""
    X = G.check_vertices(X)
    if not X:
        raise GraphError("distance to an empty set is undefined")
    G.check_vertices([v])
    return bfs_distances(G, X)[v]


def is_clique(G: Graph, vs: Sequence[int]) -> bool:
    vs = list(vs)
    return all(vs[j] in G.adj[vs[i]] for i in range(len(vs)) for j in range(i + 1, len(vs)))


def simplicial_vertices(G: Graph) -> list[int]:
    return [v for v in G.vertices if is_clique(G, sorted(G.adj[v]))]


# ---------------------------------------------------------------------------
# chordality

@dataclass(frozen=True)
class PeoCertificate:
    """Outcome of :func:`chordality`.

    ``order`` is a verified perfect elimination ordering when ``chordal``;
    otherwise ``witness`` is a chordless cycle of length at least 4, listed
    in cyclic order.
    """

    chordal: bool
    order: tuple[int, ...] = ()
    witness: tuple[int, ...] = ()


def lex_bfs(G: Graph) -> list[int]:
    """Lexicographic BFS by partition refinement; returns the visit order."""
    # each slice is a list of vertices; earlier slices have larger labels
    partition: list[list[int]] = [list(G.vertices)] if G.n else []
    order = []
    while partition:
        head = partition[0]
        v = head.pop(0)
        if not head:
            partition.pop(0)
        order.append(v)
        nb = G.adj[v]
        refined = []
        for part in partition:
            inside = [u for u in part if u in nb]
            outside = [u for u in part if u not in nb]
            if inside:
                refined.append(inside)
            if outside:
                refined.append(outside)
        partition = refined
    return order


def _first_peo_violation(G: Graph, order: Sequence[int]):
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = sorted((u for u in G.adj[v] if pos[u] > pos[v]), key=pos.__getitem__)
        for i, a in enumerate(later):
            for b in later[i + 1:]:
                if b not in G.adj[a]:
                    return v, a, b
    return None


def is_perfect_elimination_order(G: Graph, order: Sequence[int]) -> bool:
    if sorted(order) != list(G.vertices):
        return False
    return _first_peo_violation(G, order) is None


def _chordless_cycle_through(G: Graph, v: int, a: int, b: int):
    """Chordless cycle ``v, a, ..., b`` avoiding the rest of ``N[v]``, or None."""
    blocked = (G.adj[v] | {v}) - {a, b}
    prev = {a: None}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if x == b:
            break
        for y in sorted(G.adj[x]):
            if y in blocked or y in prev:
                continue
            prev[y] = x
            queue.append(y)
    if b not in prev:
        return None
    path = [b]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    path.reverse()
    return (v, *path)


def chordality(G: Graph) -> PeoCertificate:
    """Recognise chordal graphs.

    A Lex-BFS order, reversed, is checked directly as a perfect elimination
    ordering.  On failure a chordless cycle is extracted as witness.
    """
    order = lex_bfs(G)[::-1]
    bad = _first_peo_violation(G, order)
    if bad is None:
        return PeoCertificate(True, tuple(order))
    cycle = _chordless_cycle_through(G, *bad)
    if cycle is None:
        for v in G.vertices:
            nb = sorted(G.adj[v])
            for i, a in enumerate(nb):
                for b in nb[i + 1:]:
                    if b not in G.adj[a]:
                        cycle = _chordless_cycle_through(G, v, a, b)
                        if cycle is not None:
                            return PeoCertificate(False, witness=cycle)
    return PeoCertificate(False, witness=cycle or ())
