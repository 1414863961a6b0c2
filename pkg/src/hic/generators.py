"""Graph families: deterministic named families plus seeded random ones."""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .graph import Graph, GraphError

__all__ = [
    "GeneratorSpec",
    "FAMILIES",
    "generate_graph",
    "path_graph",
    "cycle_graph",
    "wheel_graph",
    "complete_graph",
    "star_of_paths",
    "erdos_renyi",
    "random_chordal",
]


def path_graph(n: int) -> Graph:
    if n < 0:
        raise GraphError("path needs n >= 0")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def wheel_graph(n: int) -> Graph:
    """``C_n`` on ``0..n-1`` plus hub ``n`` joined to every rim vertex."""
    if n < 3:
        raise GraphError("wheel needs n >= 3")
    rim = cycle_graph(n).edges
    return Graph(n + 1, rim | {(i, n) for i in range(n)})


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise GraphError("complete graph needs n >= 0")
    return Graph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


def star_of_paths(arms: int, length: int) -> Graph:
    """Centre ``0`` with ``arms`` pendant paths of ``length`` vertices each.

    Arm ``i`` occupies vertices ``1 + i*length .. (i+1)*length``, nearest the
    centre first.
    """
    if arms < 0 or length < 1:
        raise GraphError("star_of_paths needs arms >= 0 and length >= 1")
    edges = []
    for i in range(arms):
        first = 1 + i * length
        edges.append((0, first))
        edges.extend((first + j, first + j + 1) for j in range(length - 1))
    return Graph(1 + arms * length, frozenset(edges))


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    if n < 0 or not 0.0 <= p <= 1.0:
        raise GraphError("erdos_renyi needs n >= 0 and 0 <= p <= 1")
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph(n, frozenset(edges))


def random_chordal(n: int, seed: int, connected: bool = True) -> Graph:
    """Grow a chordal graph one vertex at a time.

    Each new vertex is joined to a clique of the current graph drawn
    uniformly from all its cliques (non-empty ones only when ``connected``).
    Insertion order reversed is a perfect elimination ordering.
    """
    if n < 0:
        raise GraphError("random_chordal needs n >= 0")
    rng = random.Random(seed)
    # every clique is {u} plus a subset of the clique u was attached to,
    # where u is its most recently inserted vertex
    attach: list[tuple[int, ...]] = []
    edges = []
    for v in range(n):
        weights = [1 << len(a) for a in attach]
        total = sum(weights) + (0 if connected and v else 1)
        pick = rng.randrange(total)
        clique: tuple[int, ...] = ()
        for u, w in enumerate(weights):
            if pick < w:
                base = attach[u]
                sub = tuple(x for i, x in enumerate(base) if pick >> i & 1)
                clique = (u, *sub)
                break
            pick -= w
        attach.append(tuple(sorted(clique)))
        edges.extend((u, v) for u in clique)
    return Graph(n, frozenset(edges))


@dataclass(frozen=True)
class GeneratorSpec:
    """Family name plus integer/float parameters and an optional seed."""

    family: str
    params: dict = field(default_factory=dict)
    seed: int | None = None


FAMILIES = {
    "path": (path_graph, ("n",)),
    "cycle": (cycle_graph, ("n",)),
    "wheel": (wheel_graph, ("n",)),
    "complete": (complete_graph, ("n",)),
    "star_of_paths": (star_of_paths, ("arms", "length")),
    "erdos_renyi": (erdos_renyi, ("n", "p")),
    "random_chordal": (random_chordal, ("n",)),
}

_RANDOM = {"erdos_renyi", "random_chordal"}


def generate_graph(spec: GeneratorSpec) -> Graph:
    try:
        fn, names = FAMILIES[spec.family]
    except KeyError:
        raise GraphError(
            f"unknown family {spec.family!r}; choose from {sorted(FAMILIES)}"
        ) from None
    missing = [k for k in names if k not in spec.params]
    if missing:
        raise GraphError(f"{spec.family} needs parameters {missing}")
    kwargs = dict(spec.params)
    if spec.family in _RANDOM:
        kwargs["seed"] = 0 if spec.seed is None else spec.seed
    return fn(**kwargs)
