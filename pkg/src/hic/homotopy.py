"""Symbolic homotopy types: contractible, the empty complex, or a wedge of spheres."""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

__all__ = [
    "HomotopyType",
    "CONTRACTIBLE",
    "EMPTY",
    "sphere",
    "wedge",
    "suspend",
    "wedge_combine",
    "dims_mod_r_valid",
]

_KINDS = ("contractible", "empty", "wedge")


@dataclass(frozen=True)
class HomotopyType:
    """``kind`` is one of ``contractible``, ``empty``, ``wedge``.

    For a wedge, ``spheres`` is a sorted tuple of ``(dim, count)`` pairs with
    ``dim >= 0`` and ``count >= 1``.  ``empty`` is the complex ``{∅}``, whose
    only reduced homology sits in degree -1.
    """

    kind: str
    spheres: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown homotopy type kind {self.kind!r}")
        if self.kind == "wedge":
            if not self.spheres:
                raise ValueError("a wedge needs at least one sphere")
            for d, c in self.spheres:
                if d < 0 or c < 1:
                    raise ValueError(f"bad wedge summand S^{d} x {c}")
        elif self.spheres:
            raise ValueError(f"{self.kind} carries no spheres")

    @property
    def is_contractible(self) -> bool:
        return self.kind == "contractible"

    @property
    def is_empty(self) -> bool:
        return self.kind == "empty"

    @property
    def is_wedge(self) -> bool:
        return self.kind == "wedge"

    def as_counter(self) -> Counter:
        return Counter(dict(self.spheres))

    def to_dict(self) -> dict:
        if self.kind != "wedge":
            return {"type": self.kind}
        return {"type": "wedge", "spheres": [{"dim": d, "count": c} for d, c in self.spheres]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> "HomotopyType":
        if data["type"] == "wedge":
            return wedge({int(s["dim"]): int(s["count"]) for s in data["spheres"]})
        return cls(data["type"])

    def __str__(self) -> str:
        if self.kind == "contractible":
            return "pt"
        if self.kind == "empty":
            return "{∅}"
        return " v ".join(
            f"S^{d}" if c == 1 else f"{c}xS^{d}" for d, c in self.spheres
        )


CONTRACTIBLE = HomotopyType("contractible")
EMPTY = HomotopyType("empty")


def wedge(counts: Mapping[int, int] | Iterable[tuple[int, int]]) -> HomotopyType:
    """Wedge from a ``dim -> count`` map; zero counts drop, none left is a point."""
    items = counts.items() if isinstance(counts, Mapping) else counts
    merged: Counter = Counter()
    for d, c in items:
        merged[int(d)] += int(c)
    spheres = tuple(sorted((d, c) for d, c in merged.items() if c))
    return HomotopyType("wedge", spheres) if spheres else CONTRACTIBLE


def sphere(d: int) -> HomotopyType:
    if d == -1:
        return EMPTY
    return wedge({d: 1})


def suspend(T: HomotopyType, r: int = 1) -> HomotopyType:
    """``r``-fold suspension.  The suspension of ``{∅}`` is ``S^0``."""
    if r < 0:
        raise ValueError("suspension count must be >= 0")
    if r == 0 or T.is_contractible:
        return T
    if T.is_empty:
        return sphere(r - 1)
    return HomotopyType("wedge", tuple((d + r, c) for d, c in T.spheres))


def wedge_combine(types: Iterable[HomotopyType]) -> HomotopyType:
    total: Counter = Counter()
    for T in types:
        if T.is_empty:
            raise ValueError("the empty complex cannot be a wedge summand")
        total.update(T.as_counter())
    return wedge(total)


def dims_mod_r_valid(T: HomotopyType, r: int) -> bool:
    """Every sphere dimension has the form ``r*s - 1`` with ``s >= 1``."""
    if not T.is_wedge:
        return True
    return all((d + 1) % r == 0 and (d + 1) // r >= 1 for d, _ in T.spheres)
