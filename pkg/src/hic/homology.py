"""Reduced integral homology of explicit complexes.

Boundary maps use the ascending-vertex orientation: deleting the vertex in
position ``i`` of a face contributes ``(-1)**i``.  The augmentation
``boundary_matrix(K, 0)`` sends every vertex to the empty face, so reduced
homology falls out of ordinary rank counting in every dimension including -1.

Everything is exact.  Python ints are arbitrary precision, so there is no
overflow path to guard.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .complex import SimplicialComplex
from .homotopy import HomotopyType

__all__ = [
    "IntegerMatrix",
    "HomologyGroup",
    "HomologyProfile",
    "boundary_matrix",
    "smith_normal_form",
    "rank_mod_p",
    "reduced_homology",
    "betti_mod_p",
    "homology_of_type",
    "is_prime",
]


@dataclass(frozen=True)
class IntegerMatrix:
    """Sparse integer matrix; ``entries`` maps ``(row, col)`` to a nonzero int."""

    rows: int
    cols: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {k: int(v) for k, v in self.entries.items() if v}
        for i, j in clean:
            if not (0 <= i < self.rows and 0 <= j < self.cols):
                raise IndexError(f"entry ({i}, {j}) outside {self.rows}x{self.cols}")
        object.__setattr__(self, "entries", clean)

    @classmethod
    def from_dense(cls, rows: list[list[int]]) -> "IntegerMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        return cls(nrows, ncols, {
            (i, j): v for i, row in enumerate(rows) for j, v in enumerate(row) if v
        })

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        by_row: dict[int, list] = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        acc: dict = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                acc[i, j] = acc.get((i, j), 0) + a * b
        return IntegerMatrix(self.rows, other.cols, acc)

    def is_zero(self) -> bool:
        return not self.entries


def boundary_matrix(K: SimplicialComplex, d: int) -> IntegerMatrix:
    """``∂_d``: rows are the (d-1)-faces, columns the d-faces, in stored order."""
    if K.is_void:
        raise ValueError("the void complex has no chain complex")
    if d < 0 or d > K.dim + 1:
        raise ValueError(f"boundary dimension {d} outside 0..{K.dim + 1}")
    lower = K.faces_of_dim(d - 1)
    upper = K.faces_of_dim(d)
    index = {f: i for i, f in enumerate(lower)}
    entries = {}
    for j, face in enumerate(upper):
        for pos in range(len(face)):
            sub = face[:pos] + face[pos + 1:]
            entries[index[sub], j] = -1 if pos & 1 else 1
    return IntegerMatrix(len(lower), len(upper), entries)


# ---------------------------------------------------------------------------
# Smith normal form

def _row_dicts(M: IntegerMatrix) -> dict[int, dict[int, int]]:
    rows: dict[int, dict[int, int]] = {}
    for (i, j), v in M.entries.items():
        rows.setdefault(i, {})[j] = v
    return rows


def _eliminate_units(rows: dict[int, dict[int, int]]) -> int:
    """Pivot on ±1 entries until none remain; returns the number of pivots.

    With a unit pivot the column can be cleared by row operations, after
    which the pivot row is cleared by column operations that touch no other
    row, so both are simply dropped.  Columns are swept in order and each
    takes its shortest unit row, which keeps fill-in low on boundary maps.
    """
    cols: dict[int, set[int]] = {}
    for i, row in rows.items():
        for j in row:
            cols.setdefault(j, set()).add(i)
    pivots = 0
    progress = True
    while progress:
        progress = False
        for j in sorted(cols):
            live = cols.get(j)
            if not live:
                continue
            best = None
            for i in live:
                if rows[i][j] in (1, -1):
                    key = (len(rows[i]), i)
                    if best is None or key < best:
                        best = key
            if best is None:
                continue
            i = best[1]
            prow = rows.pop(i)
            p = prow[j]
            for k in live:
                if k == i:
                    continue
                krow = rows[k]
                f = krow[j] * p
                for c, v in prow.items():
                    nv = krow.get(c, 0) - f * v
                    if nv:
                        if c not in krow:
                            cols[c].add(k)
                        krow[c] = nv
                    else:
                        del krow[c]
                        if c != j:
                            cols[c].discard(k)
                if not krow:
                    del rows[k]
            for c in prow:
                if c != j:
                    cols[c].discard(i)
            del cols[j]
            pivots += 1
            progress = True
    return pivots


def _dense_snf(A: list[list[int]]) -> list[int]:
    """Classical Smith reduction of a small dense matrix.

    Always pivots on an entry of least absolute value in the active block.
    Returns the nonzero diagonal, already a divisibility chain.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    out = []
    t = 0
    while t < min(m, n):
        # smallest nonzero entry of the active block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = A[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, i, j = best
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            done = True
            p = A[t][t]
            for k in range(t + 1, m):
                if A[k][t]:
                    q = A[k][t] // p
                    if q:
                        A[k] = [a - q * b for a, b in zip(A[k], A[t])]
                    if A[k][t]:
                        done = False
            for k in range(t + 1, n):
                if A[t][k]:
                    q = A[t][k] // p
                    if q:
                        for row in A:
                            row[k] -= q * row[t]
                    if A[t][k]:
                        done = False
            if not done:
                # move a smaller remainder onto the diagonal and retry
                cands = [(abs(A[k][t]), k, t) for k in range(t + 1, m) if A[k][t]]
                cands += [(abs(A[t][k]), t, k) for k in range(t + 1, n) if A[t][k]]
                _, i, j = min(cands)
                A[t], A[i] = A[i], A[t]
                for row in A:
                    row[t], row[j] = row[j], row[t]
                continue
            bad = next(
                (k for k in range(t + 1, m) if any(A[k][c] % p for c in range(t + 1, n))),
                None,
            )
            if bad is None:
                break
            A[t] = [a + b for a, b in zip(A[t], A[bad])]
        out.append(abs(A[t][t]))
        t += 1
    return out


def smith_normal_form(M: IntegerMatrix) -> tuple[tuple[int, ...], int]:
    """Invariant factors ``d1 | d2 | ... | d_rank`` of ``M`` and its rank."""
    rows = _row_dicts(M)
    units = _eliminate_units(rows)
    factors = [1] * units
    if rows:
        live_cols = sorted({c for row in rows.values() for c in row})
        cidx = {c: k for k, c in enumerate(live_cols)}
        dense = []
        for i in sorted(rows):
            r = [0] * len(live_cols)
            for c, v in rows[i].items():
                r[cidx[c]] = v
            dense.append(r)
        factors += _dense_snf(dense)
    return tuple(factors), len(factors)


# ---------------------------------------------------------------------------
# modular rank

def is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


def rank_mod_p(M: IntegerMatrix, p: int) -> int:
    """Rank over GF(p) by sparse Gaussian elimination."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    pivots: dict[int, dict[int, int]] = {}  # leading column -> normalised row
    for row in _row_dicts(M).values():
        row = {c: v % p for c, v in row.items() if v % p}
        while row:
            lead = min(row)
            prow = pivots.get(lead)
            if prow is None:
                inv = pow(row[lead], -1, p)
                pivots[lead] = {c: v * inv % p for c, v in row.items()}
                break
            f = row[lead]
            for c, v in prow.items():
                nv = (row.get(c, 0) - f * v) % p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return len(pivots)


# ---------------------------------------------------------------------------
# homology profiles

@dataclass(frozen=True, order=True)
class HomologyGroup:
    """``H̃_d ≅ Z^betti ⊕ Z/t1 ⊕ Z/t2 ⊕ ...``"""

    d: int
    betti: int
    torsion: tuple[int, ...] = ()


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced homology in all dimensions, stored sparsely.

    ``groups`` lists only the nonzero groups, ascending by dimension;
    ``void`` marks the void complex, whose profile is empty by convention.
    """

    groups: tuple[HomologyGroup, ...] = ()
    void: bool = False

    @classmethod
    def from_dims(cls, data: Iterable[HomologyGroup], void: bool = False) -> "HomologyProfile":
        kept = sorted(g for g in data if g.betti or g.torsion)
        return cls(tuple(kept), void)

    def group(self, d: int) -> HomologyGroup:
        for g in self.groups:
            if g.d == d:
                return g
        return HomologyGroup(d, 0, ())

    def betti(self, d: int) -> int:
        return self.group(d).betti

    def torsion(self, d: int) -> tuple[int, ...]:
        return self.group(d).torsion

    def betti_numbers(self) -> dict[int, int]:
        return {g.d: g.betti for g in self.groups if g.betti}

    @property
    def torsion_free(self) -> bool:
        return all(not g.torsion for g in self.groups)

    @property
    def is_trivial(self) -> bool:
        return not self.groups

    def vanishes_through(self, top: int) -> bool:
        """All groups ``H̃_j`` with ``j <= top`` are zero."""
        return all(g.d > top for g in self.groups)

    def euler_characteristic(self) -> int:
        return sum((-1) ** g.d * g.betti for g in self.groups)

    def to_dict(self) -> dict:
        return {"dims": [
            {"d": g.d, "betti": g.betti, "torsion": list(g.torsion)} for g in self.groups
        ]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "HomologyProfile":
        return cls.from_dims(
            HomologyGroup(int(e["d"]), int(e["betti"]), tuple(e.get("torsion", ())))
            for e in data["dims"]
        )

    def __str__(self) -> str:
        if not self.groups:
            return "0"
        parts = []
        for g in self.groups:
            terms = [f"Z^{g.betti}" if g.betti > 1 else "Z"] if g.betti else []
            terms += [f"Z/{t}" for t in g.torsion]
            parts.append(f"H{g.d}=" + "+".join(terms))
        return " ".join(parts)


def reduced_homology(K: SimplicialComplex) -> HomologyProfile:
    if K.is_void:
        return HomologyProfile(void=True)
    top = K.dim
    # snf[d] describes ∂_d for d = 0..top (∂_{top+1} is the zero map)
    snf = {d: smith_normal_form(boundary_matrix(K, d)) for d in range(top + 1)}
    groups = []
    for d in range(-1, top + 1):
        rank_out = snf[d][1] if d >= 0 else 0
        factors_in, rank_in = snf.get(d + 1, ((), 0))
        betti = len(K.faces_of_dim(d)) - rank_out - rank_in
        torsion = tuple(f for f in factors_in if f > 1)
        groups.append(HomologyGroup(d, betti, torsion))
    return HomologyProfile.from_dims(groups)


def betti_mod_p(K: SimplicialComplex, p: int) -> dict[int, int]:
    """``dim H̃_d(K; Z/p)`` for every ``d`` where it is nonzero."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if K.is_void:
        return {}
    top = K.dim
    ranks = {d: rank_mod_p(boundary_matrix(K, d), p) for d in range(top + 1)}
    out = {}
    for d in range(-1, top + 1):
        b = len(K.faces_of_dim(d)) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if b:
            out[d] = b
    return out


def homology_of_type(T: HomotopyType) -> HomologyProfile:
    if T.is_contractible:
        return HomologyProfile()
    if T.is_empty:
        return HomologyProfile((HomologyGroup(-1, 1),))
    return HomologyProfile.from_dims(HomologyGroup(d, c) for d, c in T.spheres)
