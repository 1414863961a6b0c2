"""Chordal graphs whose r-independence complex is a prescribed wedge of spheres.

Layout for ``r`` and summands ``(d_1, k_1), ..., (d_n, k_n)``:

* a path ``v_1 - ... - v_r``;
* hub groups ``W_i`` of ``d_i`` vertices; all hubs together with ``v_r``
  form a clique;
* every hub ``x`` in ``W_i`` is the end of its own path ``P_x`` on
  ``(r+2)(k_i-1)+1`` vertices;
* every hub is also joined to every vertex of every *other* hub's path.

Deleting the closed neighbourhood of the support ``{v_2..v_r, x}`` of
``v_1`` leaves ``P_x`` minus its first two vertices, a path on
``(r+2)(k_i-1)-1`` vertices, which carries ``S^{r(k_i-1)-1}``; suspending
``r`` times gives one ``S^{r k_i - 1}`` per hub.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .graph import Graph
from .homotopy import HomotopyType, wedge

__all__ = [
    "WedgeSpec",
    "SynthesisResult",
    "SynthesisError",
    "parse_summands",
    "expected_wedge",
    "synthesize_chordal",
]

DEFAULT_MAX_VERTICES = 100_000


class SynthesisError(ValueError):
    pass


@dataclass(frozen=True)
class WedgeSpec:
    """``summands`` are ``(d, k)`` pairs: ``d`` copies of ``S^{rk-1}``."""

    r: int
    summands: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.r < 2:
            raise SynthesisError(f"realisation needs r >= 2, got r={self.r}")
        object.__setattr__(self, "summands", tuple((int(d), int(k)) for d, k in self.summands))
        if not self.summands:
            raise SynthesisError("at least one summand is required")
        for d, k in self.summands:
            if d < 1 or k < 1:
                raise SynthesisError(f"summand {d}:{k} must have d >= 1 and k >= 1")

    @property
    def n_vertices(self) -> int:
        return self.r + sum(d * (self.r + 2) * (k - 1) + d for d, k in self.summands)


def parse_summands(text: str) -> tuple[tuple[int, int], ...]:
    """``"1:1,2:2"`` -> ``((1, 1), (2, 2))``."""
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            d, k = chunk.split(":")
            out.append((int(d), int(k)))
        except ValueError:
            raise SynthesisError(f"bad summand {chunk!r}; expected d:k") from None
    return tuple(out)


def expected_wedge(spec: WedgeSpec) -> HomotopyType:
    return wedge((spec.r * k - 1, d) for d, k in spec.summands)


@dataclass(frozen=True)
class SynthesisResult:
    """``labels[v]`` names vertex ``v``: ``v<j>`` on the initial path,
    ``w<i>.<t>`` for hub ``t`` of group ``i``, ``p<i>.<t>.<s>`` for the
    ``s``-th vertex after that hub on its path (all 1-based)."""

    spec: WedgeSpec
    graph: Graph
    labels: tuple[str, ...]
    hubs: tuple[tuple[int, int], ...]  # (group index, vertex)
    paths: tuple[tuple[int, ...], ...]  # per hub, hub first
    expected: HomotopyType

    def to_dict(self) -> dict:
        return {
            "r": self.spec.r,
            "summands": [{"d": d, "k": k} for d, k in self.spec.summands],
            "n": self.graph.n,
            "labels": {str(v): name for v, name in enumerate(self.labels)},
            "expected": self.expected.to_dict(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def synthesize_chordal(spec: WedgeSpec, max_vertices: int = DEFAULT_MAX_VERTICES) -> SynthesisResult:
    r = spec.r
    if spec.n_vertices > max_vertices:
        raise SynthesisError(
            f"construction needs {spec.n_vertices} vertices, over max_vertices={max_vertices}"
        )
    labels = [f"v{j + 1}" for j in range(r)]
    edges = [(j, j + 1) for j in range(r - 1)]

    hubs: list[tuple[int, int]] = []
    for i, (d, _) in enumerate(spec.summands, start=1):
        for t in range(1, d + 1):
            hubs.append((i, len(labels)))
            labels.append(f"w{i}.{t}")
    hub_ids = [x for _, x in hubs]
    clique = [r - 1] + hub_ids
    edges += [(a, b) for n, a in enumerate(clique) for b in clique[n + 1:]]

    paths = []
    counters: dict[int, int] = {}
    for i, x in hubs:
        k = spec.summands[i - 1][1]
        t = counters[i] = counters.get(i, 0) + 1
        path = [x]
        for s in range(1, (r + 2) * (k - 1) + 1):
            path.append(len(labels))
            labels.append(f"p{i}.{t}.{s}")
        edges += list(zip(path, path[1:]))
        paths.append(tuple(path))

    for a in hub_ids:
        for path in paths:
            if path[0] != a:
                edges += [(a, b) for b in path if b != a]

    G = Graph(len(labels), frozenset(edges))
    return SynthesisResult(spec, G, tuple(labels), tuple(hubs), tuple(paths), expected_wedge(spec))
