"""Exact domination-type invariants and r-supports.

All solvers work component by component and add the results; each
component is an exact minimum set cover (see :mod:`hic.setcover`).

Witnesses are lists of vertex lists.  For vertex-set problems every chosen
vertex is its own singleton list, so ``len(witness) == value`` always.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, GraphError, bfs_distances, connected_components
from .setcover import min_set_cover

__all__ = [
    "DominationCertificate",
    "InfeasibleDomination",
    "SupportSet",
    "SupportFamily",
    "distance_domination_number",
    "set_domination_number",
    "domination_number",
    "strong_domination_number",
    "enumerate_connected_sets",
    "supports",
    "check_certificate",
]


class InfeasibleDomination(ValueError):
    """No feasible solution exists (e.g. strong domination with an isolated vertex)."""


@dataclass(frozen=True)
class DominationCertificate:
    problem: str  # gamma_r | omega_r | Gamma | Gamma0
    r: int | None
    value: int
    witness: tuple[tuple[int, ...], ...]

    def to_dict(self) -> dict:
        return {
            "problem": self.problem,
            "r": self.r,
            "value": self.value,
            "witness": [list(w) for w in self.witness],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @property
    def vertices(self) -> frozenset:
        return frozenset(v for w in self.witness for v in w)


def _mask(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _solve(G: Graph, candidates) -> list[tuple[int, ...]]:
    """Minimum cover, per component, by ``(vertex set, coverage mask)`` pairs.

    ``candidates(comp)`` yields the pairs available inside one component.
    """
    chosen: list[tuple[int, ...]] = []
    for comp in connected_components(G):
        pairs = list(candidates(comp))
        picked = min_set_cover(_mask(comp), [cov for _, cov in pairs])
        chosen.extend(pairs[i][0] for i in picked)
    return sorted(chosen)


def _check_r(r: int):
    if r < 1:
        raise GraphError(f"r must be a positive integer, got {r}")


def distance_domination_number(G: Graph, r: int) -> DominationCertificate:
    """``gamma_r``: fewest vertices with every vertex within distance ``r``."""
    _check_r(r)

    def balls(comp):
        for v in comp:
            d = bfs_distances(G, [v])
            yield (v,), _mask(u for u in comp if d[u] <= r)

    witness = _solve(G, balls)
    return DominationCertificate("gamma_r", r, len(witness), tuple(witness))


def domination_number(G: Graph) -> DominationCertificate:
    """Classical domination number (closed neighbourhoods)."""
    cert = distance_domination_number(G, 1)
    return DominationCertificate("Gamma", None, cert.value, cert.witness)


def strong_domination_number(G: Graph) -> DominationCertificate:
    """Fewest vertices such that every vertex has a neighbour among them."""
    isolated = [v for v in G.vertices if not G.adj[v]]
    if isolated:
        raise InfeasibleDomination(
            f"vertex {isolated[0]} is isolated; no vertex set is adjacent to it"
        )

    def open_nbhds(comp):
        for v in comp:
            yield (v,), G.adj_mask[v]

    witness = _solve(G, open_nbhds)
    return DominationCertificate("Gamma0", None, len(witness), tuple(witness))


def _esu(G: Graph, root: int, max_size: int, anchored: bool):
    """Connected sets containing ``root``; without ``anchored`` the other
    members must exceed ``root`` so each set is produced from its minimum.

    Every set is produced exactly once (extension by exclusive neighbours).
    """
    adj = G.adj

    def ok(u):
        return anchored or u > root

    def grow(members, closed, ext):
        yield members
        if len(members) == max_size:
            return
        ext = list(ext)
        while ext:
            w = ext.pop()
            fresh = [u for u in adj[w] if ok(u) and not closed >> u & 1]
            yield from grow(
                members + (w,),
                closed | G.adj_mask[w] | (1 << w),
                ext + sorted(fresh),
            )

    start = [u for u in sorted(adj[root]) if ok(u)]
    yield from grow((root,), G.adj_mask[root] | (1 << root), start)


def enumerate_connected_sets(
    G: Graph, max_size: int, anchor: int | None = None
) -> list[tuple[int, ...]]:
    """All vertex sets of size ``1..max_size`` inducing a connected subgraph.

    Sorted by size, then lexicographically.  With ``anchor`` only sets
    containing it are returned.
    """
    if max_size < 1:
        raise GraphError("max_size must be >= 1")
    if anchor is not None:
        G.check_vertices([anchor])
        found = _esu(G, anchor, max_size, anchored=True)
    else:
        found = (s for v in G.vertices for s in _esu(G, v, max_size, anchored=False))
    return sorted((tuple(sorted(s)) for s in found), key=lambda s: (len(s), s))


def set_domination_number(G: Graph, r: int) -> DominationCertificate:
    """``omega_r``: fewest connected sets of size <= r whose closed
    neighbourhoods cover every vertex."""
    _check_r(r)
    adj = G.adj_mask

    def pieces(comp):
        for v in comp:
            for s in _esu(G, v, r, anchored=False):
                cov = 0
                for x in s:
                    cov |= adj[x] | (1 << x)
                yield tuple(sorted(s)), cov

    witness = _solve(G, pieces)
    return DominationCertificate("omega_r", r, len(witness), tuple(witness))


def check_certificate(G: Graph, cert: DominationCertificate) -> bool:
    """Feasibility of the witness (not its optimality)."""
    if len(cert.witness) != cert.value:
        return False
    if cert.problem in ("gamma_r", "Gamma"):
        r = cert.r or 1
        if any(len(w) != 1 for w in cert.witness):
            return False
        if not cert.witness:
            return G.n == 0
        d = bfs_distances(G, cert.vertices)
        return all(x <= r for x in d)
    if cert.problem == "Gamma0":
        S = cert.vertices
        return all(G.adj[v] & S for v in G.vertices)
    if cert.problem == "omega_r":
        covered = set()
        for w in cert.witness:
            if not 1 <= len(w) <= cert.r:
                return False
            if len(connected_components(G, w)) != 1:
                return False
            for x in w:
                covered.add(x)
                covered |= G.adj[x]
        return covered == set(G.vertices)
    raise ValueError(f"unknown problem {cert.problem!r}")


# ---------------------------------------------------------------------------
# supports

@dataclass(frozen=True)
class SupportSet:
    vertices: tuple[int, ...]
    induced_connected: bool
    dominates_neighborhood: bool


@dataclass(frozen=True)
class SupportFamily:
    """The r-supports of ``v``: sets S of size r, v not in S, G[S + v] connected."""

    v: int
    r: int
    sets: tuple[SupportSet, ...]

    @property
    def connected(self) -> bool:
        """Every support induces a connected subgraph."""
        return all(s.induced_connected for s in self.sets)

    @property
    def dominating(self) -> bool:
        """``N(v) ⊆ N[S]`` for every support ``S``."""
        return all(s.dominates_neighborhood for s in self.sets)

    def vertex_sets(self) -> list[tuple[int, ...]]:
        return [s.vertices for s in self.sets]

    def __len__(self) -> int:
        return len(self.sets)

    def to_dict(self) -> dict:
        return {
            "vertex": self.v,
            "r": self.r,
            "supports": [
                {
                    "set": list(s.vertices),
                    "induced_connected": s.induced_connected,
                    "dominates_neighborhood": s.dominates_neighborhood,
                }
                for s in self.sets
            ],
        }


def supports(G: Graph, v: int, r: int) -> SupportFamily:
    G.check_vertices([v])
    if r < 0:
        raise GraphError("r must be >= 0")
    if r == 0:
        return SupportFamily(v, 0, (SupportSet((), True, True),))
    nbrs = G.adj[v]
    out = []
    for A in enumerate_connected_sets(G, r + 1, anchor=v):
        if len(A) != r + 1:
            continue
        S = tuple(x for x in A if x != v)
        closed = set(S)
        for x in S:
            closed |= G.adj[x]
        out.append(SupportSet(
            S,
            len(connected_components(G, S)) == 1,
            nbrs <= closed,
        ))
    return SupportFamily(v, r, tuple(sorted(out, key=lambda s: s.vertices)))
