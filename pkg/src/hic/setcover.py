"""Exact minimum set cover over bitmask sets (branch and bound)."""
from __future__ import annotations

from typing import Sequence

__all__ = ["InfeasibleCover", "min_set_cover", "greedy_cover"]


class InfeasibleCover(ValueError):
    """The sets do not cover the universe."""


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _reduce_dominated(sets: Sequence[int]) -> list[int]:
    """Indices of sets not contained in another set (first copy of equals kept)."""
    order = sorted(range(len(sets)), key=lambda i: (-_popcount(sets[i]), i))
    kept: list[int] = []
    for i in order:
        s = sets[i]
        if not s:
            continue
        if any(s & sets[k] == s for k in kept):
            continue
        kept.append(i)
    return sorted(kept)


def greedy_cover(universe: int, sets: Sequence[int]) -> list[int]:
    uncovered = universe
    chosen = []
    while uncovered:
        i = max(range(len(sets)), key=lambda k: (_popcount(sets[k] & uncovered), -k))
        if not sets[i] & uncovered:
            raise InfeasibleCover("sets do not cover the universe")
        chosen.append(i)
        uncovered &= ~sets[i]
    return chosen


def min_set_cover(universe: int, sets: Sequence[int]) -> list[int]:
    """Indices of a minimum-cardinality subfamily covering ``universe``.

    Deterministic for a given input order.  Sets contained in
    another set are discarded first; the greedy cover seeds the incumbent;
    each node branches on the uncovered element with fewest covering sets,
    trying larger marginal coverage first, and prunes with the bound
    ``ceil(|uncovered| / max marginal coverage)``.
    """
    sets = [s & universe for s in sets]
    if not universe:
        return []
    cand = _reduce_dominated(sets)
    union = 0
    for i in cand:
        union |= sets[i]
    if union != universe:
        raise InfeasibleCover("sets do not cover the universe")

    elems = [b for b in range(universe.bit_length()) if universe >> b & 1]
    covering = {e: [i for i in cand if sets[i] >> e & 1] for e in elems}

    keep = set(cand)
    best = sorted(greedy_cover(universe, [s if i in keep else 0 for i, s in enumerate(sets)]))

    def search(uncovered: int, chosen: list[int]):
        nonlocal best
        if not uncovered:
            if len(chosen) < len(best):
                best = sorted(chosen)
            return
        room = len(best) - 1 - len(chosen)
        if room <= 0:
            return
        gain = max(_popcount(sets[i] & uncovered) for i in cand)
        need = -(-_popcount(uncovered) // gain)
        if need > room:
            return
        e = min(
            (b for b in elems if uncovered >> b & 1),
            key=lambda b: (len(covering[b]), b),
        )
        options = sorted(covering[e], key=lambda i: (-_popcount(sets[i] & uncovered), i))
        for i in options:
            chosen.append(i)
            search(uncovered & ~sets[i], chosen)
            chosen.pop()

    search(universe, [])
    return best
