"""Sparse integer matrices, Smith normal form and homology of a cell complex."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd

from . import kernels
from .errors import ComplexNotValidated


@dataclass
class IntMatrix:
    """Sparse integer matrix stored as ``{(row, col): value}`` with no zeros."""

    rows: int
    cols: int
    entries: dict = field(default_factory=dict)

    @classmethod
    def from_dense(cls, data) -> "IntMatrix":
        data = [list(r) for r in data]
        nrows = len(data)
        ncols = len(data[0]) if data else 0
        ent = {(i, j): int(v) for i, row in enumerate(data) for j, v in enumerate(row) if v}
        return cls(nrows, ncols, ent)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def triplets(self) -> list[tuple[int, int, int]]:
        return [(i, j, v) for (i, j), v in sorted(self.entries.items())]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()})

    def matmul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        by_row: dict[int, list] = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        out: dict = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                out[(i, j)] = out.get((i, j), 0) + a * b
        return IntMatrix(self.rows, other.cols, {key: v for key, v in out.items() if v})

    def is_zero(self) -> bool:
        return not self.entries

    def mod2(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, {k: 1 for k, v in self.entries.items() if v & 1})


def invariant_factors(diagonal) -> list[int]:
    """Turn any nonzero diagonal into the Smith chain d_1 | d_2 | ... by
    repeatedly replacing pairs with (gcd, lcm)."""
    d = sorted(abs(x) for x in diagonal if x)
    n = len(d)
    for i in range(n):
        for j in range(i + 1, n):
            a, b = d[i], d[j]
            if b % a:
                g = gcd(a, b)
                d[i], d[j] = g, a // g * b
    return d


def smith_normal_form(m: IntMatrix, backend=None) -> list[int]:
    """Nonzero invariant factors of ``m``; their number is the rank."""
    if m.is_zero():
        return []
    diag = kernels.smith_diagonal(m.entries, m.rows, m.cols, backend=backend)
    return invariant_factors(diag)


def rank(m: IntMatrix, backend=None) -> int:
    return len(smith_normal_form(m, backend))


def rank_mod2(m: IntMatrix, backend=None) -> int:
    if m.is_zero():
        return 0
    return kernels.rank_mod2(m.entries, m.rows, m.cols, backend=backend)


@dataclass(frozen=True)
class HomologyGroup:
    """Z^free ⊕ Z/t_1 ⊕ ... with t_i > 1."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " ⊕ ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


def homology(cx, backend=None) -> list[HomologyGroup]:
    """H_0 .. H_top of a validated complex."""
    if not cx.validated:
        raise ComplexNotValidated("run check_square_zero() before computing homology")
    top = cx.top_dim
    dims = cx.dims
    factors = {d: smith_normal_form(cx.delta(d), backend) for d in range(1, top + 1)}
    out = []
    for k in range(top + 1):
        rk_out = len(factors.get(k, ()))
        inc = factors.get(k + 1, [])
        free = dims[k] - rk_out - len(inc)
        out.append(HomologyGroup(free, tuple(x for x in inc if x > 1)))
    return out


def betti_mod2(cx, backend=None) -> list[int]:
    """dim H_k(X; Z/2)."""
    if not cx.validated:
        raise ComplexNotValidated("run check_square_zero() before computing homology")
    top = cx.top_dim
    dims = cx.dims
    ranks = {d: rank_mod2(cx.delta(d), backend) for d in range(1, top + 1)}
    return [dims[k] - ranks.get(k, 0) - ranks.get(k + 1, 0) for k in range(top + 1)]


def format_homology(groups) -> str:
    return " ".join(f"H{k}={g}" for k, g in enumerate(groups))


def homology_json(groups) -> str:
    return json.dumps([dict(degree=k, group=str(g), **g.to_dict()) for k, g in enumerate(groups)])
