"""Cellular chain complexes of K (cells indexed by U) and of the maximal flag
manifold (cells indexed by W)."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import BoundarySquareError
from .rootsys import RootSystem, build_root_system, cartan_pairing
from .snf import IntMatrix
from .ugroup import CVector, LiftedGroup, UElement
from .weyl import WeylElement, bruhat_subword_positions, inversion_set

COMPACT = "compact"
FLAG = "flag"


def sigma(rs: RootSystem, word, i: int) -> int:
    """Sum of ``<beta, alpha^v>`` over the inversion set of the suffix after
    position ``i``, where ``alpha`` is the simple root of the i-th letter."""
    word = tuple(word)
    if not 1 <= i <= len(word):
        raise IndexError(f"position {i} outside word of length {len(word)}")
    inversion_set(rs, word)  # raises on a non-reduced word
    letter = word[i - 1]
    return sum(cartan_pairing(rs, letter, beta) for beta in inversion_set(rs, word[i:]))


@dataclass(frozen=True)
class BoundaryCoefficient:
    u: UElement
    v: UElement
    position: int
    kind: int
    sigma: int | None
    epsilon: int
    value: int


def boundary_of_cell(group: LiftedGroup, u: UElement) -> list[BoundaryCoefficient]:
    """One coefficient per (position, kind) of the covers of ``u``.

    The orientation comparison factor is taken to be +1 throughout; a wrong
    choice shows up as delta o delta != 0 when the complex is built.
    """
    rs = group.rs
    out = []
    eps = 1
    sig_cache: dict[int, int] = {}
    for i, kind, v in group.covers_below(u):
        if kind == 0:
            out.append(BoundaryCoefficient(u, v, i, 0, None, eps, eps * (-1) ** i))
        else:
            if i not in sig_cache:
                sig_cache[i] = sigma(rs, u.w.word, i)
            s = sig_cache[i]
            out.append(BoundaryCoefficient(u, v, i, 1, s, eps, eps * (-1) ** ((i + 1 + s) % 2)))
    return out


def flag_boundary_of_cell(group: LiftedGroup, w: WeylElement) -> list[tuple[int, WeylElement, int]]:
    """``(position, w_i, coefficient)`` for the flag manifold: the two kinds of
    coefficient summed, as happens under the projection C -> 1."""
    u = UElement(w, CVector(0, group.rank))
    acc: dict[int, list] = {}
    for bc in boundary_of_cell(group, u):
        entry = acc.setdefault(bc.position, [bc.v.w, 0])
        entry[1] += bc.value
    return [(i, wv, val) for i, (wv, val) in sorted(acc.items())]


@dataclass
class CellComplex:
    space: str
    lie_type: str
    cells_by_dim: dict[int, list]
    # boundary[d] maps d-chains to (d-1)-chains: shape (#cells_{d-1}, #cells_d)
    boundary: dict[int, IntMatrix]
    validated: bool = False
    index: dict[int, dict] = field(default_factory=dict, repr=False)

    @property
    def top_dim(self) -> int:
        return max(self.cells_by_dim) if self.cells_by_dim else -1

    @property
    def dims(self) -> list[int]:
        return [len(self.cells_by_dim.get(d, ())) for d in range(self.top_dim + 1)]

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * n for d, n in enumerate(self.dims))

    def delta(self, d: int) -> IntMatrix:
        if d in self.boundary:
            return self.boundary[d]
        rows = len(self.cells_by_dim.get(d - 1, ()))
        cols = len(self.cells_by_dim.get(d, ()))
        return IntMatrix(rows, cols, {})

    def check_square_zero(self) -> None:
        """Raise BoundarySquareError at the first nonzero entry of delta_{d} o delta_{d+1}."""
        for d in range(2, self.top_dim + 1):
            prod = self.delta(d - 1).matmul(self.delta(d))
            for (r, c), val in sorted(prod.entries.items(), key=lambda kv: (kv[0][1], kv[0][0])):
                top = self.cells_by_dim[d][c]
                bottom = self.cells_by_dim[d - 2][r]
                raise BoundarySquareError(d, _cell_label(top), _cell_label(bottom), val)
        self.validated = True

    def to_dict(self) -> dict:
        return {
            "space": self.space,
            "type": self.lie_type,
            "dims": self.dims,
            "cells": [
                {"d": d, "cells": [_cell_label(x) for x in self.cells_by_dim[d]]}
                for d in range(self.top_dim + 1)
            ],
            "boundaries": [
                {"d": d, "entries": [list(t) for t in self.delta(d).triplets()]}
                for d in range(1, self.top_dim + 1)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _cell_label(cell) -> str:
    if isinstance(cell, UElement):
        return str(cell)
    return str(cell)


def build_complex(
    group: LiftedGroup | RootSystem | str, space: str = COMPACT, check: bool = True
) -> CellComplex:
    """Assemble all boundary matrices; with ``check`` the delta o delta = 0
    test runs and a failure raises BoundarySquareError."""
    if not isinstance(group, LiftedGroup):
        rs = build_root_system(group) if isinstance(group, str) else group
        group = LiftedGroup(rs)
    wg = group.wg
    by_len = wg.by_length
    cells: dict[int, list] = {}
    index: dict[int, dict] = {}
    if space == COMPACT:
        ncs = 1 << group.rank
        for d, ws in sorted(by_len.items()):
            cells[d] = [UElement(w, CVector(m, group.rank)) for w in ws for m in range(ncs)]
    elif space == FLAG:
        for d, ws in sorted(by_len.items()):
            cells[d] = list(ws)
    else:
        raise ValueError(f"unknown space {space!r}")
    for d, cs in cells.items():
        index[d] = {x: k for k, x in enumerate(cs)}

    boundary: dict[int, IntMatrix] = {}
    for d in range(1, max(cells) + 1):
        entries: dict[tuple[int, int], int] = {}
        rows = index[d - 1]
        if space == COMPACT:
            # delta(u c) = delta(u) c, so only c = 1 needs the cover computation
            for col, u in enumerate(cells[d]):
                if u.c.mask:
                    continue
                coeffs = boundary_of_cell(group, u)
                for m in range(1 << group.rank):
                    shift = CVector(m, group.rank)
                    ccol = col + m
                    for bc in coeffs:
                        v = UElement(bc.v.w, bc.v.c * shift)
                        key = (rows[v], ccol)
                        entries[key] = entries.get(key, 0) + bc.value
        else:
            for col, w in enumerate(cells[d]):
                for _, wv, val in flag_boundary_of_cell(group, w):
                    key = (rows[wv], col)
                    entries[key] = entries.get(key, 0) + val
        boundary[d] = IntMatrix(len(cells[d - 1]), len(cells[d]), {k: v for k, v in entries.items() if v})
    cx = CellComplex(space, str(group.rs.lie_type), cells, boundary, False, index)
    if check:
        cx.check_square_zero()
    return cx


# -- text rendering --------------------------------------------------------

def render_word(word, letter: str = "s") -> str:
    """Reduced word with repeated blocks folded, e.g. ``(s1 s2)^2 s1``."""
    word = tuple(word)
    if not word:
        return "1"
    parts = []
    p = 0
    n = len(word)
    while p < n:
        best = None  # (covered, block_len, reps)
        for blen in range(2, (n - p) // 2 + 1):
            block = word[p : p + blen]
            reps = 1
            while word[p + reps * blen : p + (reps + 1) * blen] == block:
                reps += 1
            if reps >= 2 and (best is None or reps * blen > best[0]):
                best = (reps * blen, blen, reps)
        if best is None:
            parts.append(f"{letter}{word[p]}")
            p += 1
        else:
            _, blen, reps = best
            inner = " ".join(f"{letter}{i}" for i in word[p : p + blen])
            parts.append(f"({inner})^{reps}")
            p += blen * reps
    return " ".join(parts)


def _c_monomial(mask: int, rank: int) -> str:
    if not mask:
        return "1"
    return " ".join(f"c{k + 1}" for k in range(rank) if mask >> k & 1)


def _signed_terms(terms):
    """Join ``[(coef, text)]`` as ``a - b + c``; returns (leading_sign, body)."""
    out = []
    for k, (coef, text) in enumerate(terms):
        mag = abs(coef)
        t = text if mag == 1 else f"{mag} {text}"
        if k == 0:
            out.append(("-" if coef < 0 else "") + t)
        else:
            out.append(("- " if coef < 0 else "+ ") + t)
    return " ".join(out)


def _poly(coeffs: dict[int, int], rank: int) -> tuple[int, str]:
    """Sign and text of an element of Z[C]; positive terms first, and an
    all-negative polynomial has its sign factored out."""
    items = sorted((m, v) for m, v in coeffs.items() if v)
    sign = 1
    if items and all(v < 0 for _, v in items):
        sign = -1
        items = [(m, -v) for m, v in items]
    pos = [(v, _c_monomial(m, rank)) for m, v in items if v > 0]
    neg = [(v, _c_monomial(m, rank)) for m, v in items if v < 0]
    return sign, _signed_terms(pos + neg)


def render_boundary(group: LiftedGroup, u: UElement) -> str:
    """``delta B(u)`` in the notation ``B(s1)(1 - c2) - B(s2)(1 + c1 c2)``.

    Terms are grouped by the Weyl part of the target cell, in order of
    decreasing deleted position; 0-cells ``B(c)`` are written as ``c``.
    """
    groups: dict[int, tuple[WeylElement, dict[int, int]]] = {}
    order: list[int] = []
    for bc in boundary_of_cell(group, u):
        i = bc.position
        if i not in groups:
            groups[i] = (bc.v.w, {})
            order.append(i)
        poly = groups[i][1]
        poly[bc.v.c.mask] = poly.get(bc.v.c.mask, 0) + bc.value
    if not order:
        return "0"
    pieces = []
    for i in sorted(order, reverse=True):
        w, poly = groups[i]
        sign, body = _poly(poly, group.rank)
        if not body:
            continue
        if w.length == 0:
            text = body
        elif body == "1":
            text = f"B({render_word(w.word)})"
        else:
            text = f"B({render_word(w.word)})({body})"
        pieces.append((sign, text))
    if not pieces:
        return "0"
    return _signed_terms(pieces)


def render_flag_boundary(group: LiftedGroup, w: WeylElement) -> str:
    terms = [
        (val, f"B({render_word(wv.word, 'r')})" if wv.length else "B(1)")
        for i, wv, val in sorted(flag_boundary_of_cell(group, w), key=lambda t: -t[0])
        if val
    ]
    return _signed_terms(terms) if terms else "0"


def cell_name(u: UElement) -> str:
    """``B(...)`` label of a cell with its C part appended."""
    body = render_word(u.w.word) if u.w.length else ""
    c = _c_monomial(u.c.mask, u.c.rank) if u.c.mask else ""
    return f"B({' '.join(x for x in (body, c) if x) or '1'})"


def render_complex(cx: CellComplex, group: LiftedGroup) -> str:
    lines = []
    for d in range(1, cx.top_dim + 1):
        for cell in cx.cells_by_dim[d]:
            if cx.space == COMPACT:
                lines.append(f"{cell_name(cell)} -> {render_boundary(group, cell)}")
            else:
                lines.append(f"B({render_word(cell.word, 'r')}) -> {render_flag_boundary(group, cell)}")
    return "\n".join(lines) + "\n"
