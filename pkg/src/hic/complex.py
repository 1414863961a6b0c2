"""Explicit r-independence complexes.

A face is a sorted tuple of vertex ids.  Faces are grouped by dimension and
sorted lexicographically inside each group; ``faces[0]`` holds the empty face
(dimension -1).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .graph import Graph, GraphError, connected_components

__all__ = [
    "BuildLimits",
    "FaceBudgetExceeded",
    "SimplicialComplex",
    "is_r_independent",
    "build_ind_complex",
    "euler_characteristic",
    "star",
    "dump_complex",
    "load_complex",
]

DEFAULT_MAX_FACES = 2_000_000


class FaceBudgetExceeded(RuntimeError):
    """Face enumeration hit ``BuildLimits.max_faces``."""


@dataclass(frozen=True)
class BuildLimits:
    max_faces: int = DEFAULT_MAX_FACES
    max_dim: int | None = None

    def __post_init__(self):
        if self.max_faces < 1:
            raise ValueError("max_faces must be >= 1")


@dataclass(frozen=True)
class SimplicialComplex:
    """Faces grouped by dimension: ``faces[d + 1]`` lists the ``d``-faces.

    A complex with no faces at all is the void complex; otherwise
    ``faces[0] == ((),)``.
    """

    n_vertices: int
    faces: tuple[tuple[tuple[int, ...], ...], ...]

    @classmethod
    def from_faces(cls, n_vertices: int, faces: Iterable[Sequence[int]]) -> "SimplicialComplex":
        """Build from an arbitrary face list; the downward closure is NOT taken."""
        by_dim: dict[int, set] = {}
        for f in faces:
            t = tuple(sorted(f))
            by_dim.setdefault(len(t), set()).add(t)
        top = max(by_dim, default=-1)
        groups = tuple(tuple(sorted(by_dim.get(k, ()))) for k in range(top + 1))
        return cls(n_vertices, groups)

    @classmethod
    def from_maximal_faces(cls, n_vertices: int, facets: Iterable[Sequence[int]]) -> "SimplicialComplex":
        """Downward closure of ``facets``."""
        from itertools import combinations

        closed = set()
        for f in facets:
            t = tuple(sorted(f))
            closed.update(s for k in range(len(t) + 1) for s in combinations(t, k))
        return cls.from_faces(n_vertices, closed)

    @classmethod
    def simplex(cls, n: int) -> "SimplicialComplex":
        """Full simplex on ``n`` vertices (``n = 0`` gives ``{()}``)."""
        from itertools import combinations

        return cls(n, tuple(tuple(combinations(range(n), k)) for k in range(n + 1)))

    @property
    def is_void(self) -> bool:
        return not self.faces

    @property
    def dim(self) -> int:
        """Top dimension; -1 for ``{()}`` and -2 for the void complex."""
        return len(self.faces) - 2

    def faces_of_dim(self, d: int) -> tuple[tuple[int, ...], ...]:
        if -1 <= d <= self.dim:
            return self.faces[d + 1]
        return ()

    @property
    def f_vector(self) -> tuple[int, ...]:
        """Face counts from dimension -1 upward."""
        return tuple(len(g) for g in self.faces)

    @cached_property
    def face_set(self) -> frozenset:
        return frozenset(f for g in self.faces for f in g)

    def __contains__(self, face) -> bool:
        return tuple(sorted(face)) in self.face_set

    def __len__(self) -> int:
        return sum(self.f_vector)


def is_r_independent(G: Graph, A: Iterable[int], r: int) -> bool:
    """True iff every component of ``G[A]`` has at most ``r`` vertices."""
    if r < 1:
        raise GraphError(f"r must be a positive integer, got {r}")
    A = G.check_vertices(A)
    return all(len(c) <= r for c in connected_components(G, A))


def build_ind_complex(G: Graph, r: int, limits: BuildLimits | None = None) -> SimplicialComplex:
    """Enumerate all r-independent subsets of ``V(G)``.

    Depth-first, extending each face only by vertices larger than its
    maximum.  Because r-independence is hereditary a rejected extension
    prunes its whole subtree.  Component sizes are tracked incrementally as
    bitmask/size pairs.
    """
    if r < 1:
        raise GraphError(f"r must be a positive integer, got {r}")
    limits = limits or BuildLimits()
    adj = G.adj_mask
    n = G.n
    max_size = n if limits.max_dim is None else min(n, limits.max_dim + 1)
    by_size: list[list[tuple[int, ...]]] = [[] for _ in range(max_size + 1)]
    by_size[0].append(())
    count = 1

    def extend(face: tuple[int, ...], comps: list[tuple[int, int]]):
        nonlocal count
        if len(face) >= max_size:
            return
        start = face[-1] + 1 if face else 0
        for w in range(start, n):
            nb = adj[w]
            size = 1
            mask = 1 << w
            rest = []
            for cmask, csize in comps:
                if cmask & nb:
                    size += csize
                    mask |= cmask
                else:
                    rest.append((cmask, csize))
            if size > r:
                continue
            new = face + (w,)
            count += 1
            if count > limits.max_faces:
                raise FaceBudgetExceeded(
                    f"Ind_{r} has more than max_faces={limits.max_faces} faces"
                )
            by_size[len(new)].append(new)
            rest.append((mask, size))
            extend(new, rest)

    extend((), [])
    while len(by_size) > 1 and not by_size[-1]:
        by_size.pop()
    return SimplicialComplex(n, tuple(tuple(sorted(g)) for g in by_size))


def euler_characteristic(K: SimplicialComplex) -> int:
    """Reduced Euler characteristic, counting the empty face with sign -1."""
    return sum((-1) ** (k - 1) * f for k, f in enumerate(K.f_vector))


def star(K: SimplicialComplex, sigma: Iterable[int]) -> frozenset:
    """Faces ``tau`` of ``K`` with ``sigma | tau`` also a face."""
    sigma = frozenset(sigma)
    fs = K.face_set
    return frozenset(t for t in fs if tuple(sorted(sigma.union(t))) in fs)


def dump_complex(K: SimplicialComplex) -> str:
    out = []
    for d, group in enumerate(K.faces, start=-1):
        out.append(f"=== dim {d} ===")
        out.extend(",".join(map(str, f)) for f in group)
    return "\n".join(out) + "\n"


def load_complex(text: str, n_vertices: int | None = None) -> SimplicialComplex:
    faces = []
    current = None
    for line in text.splitlines():
        if line.startswith("==="):
            current = int(line.strip("= ").split()[1])
            continue
        if current is None:
            continue
        face = tuple(int(x) for x in line.split(",")) if line.strip() else ()
        if len(face) != current + 1:
            raise ValueError(f"face {face} listed under dimension {current}")
        faces.append(face)
    if n_vertices is None:
        n_vertices = 1 + max((v for f in faces for v in f), default=-1)
    return SimplicialComplex.from_faces(n_vertices, faces)
