"""The lifted group U = M* of a split real form.

Elements are normal forms ``u = s_{i1} ... s_{id} c`` where ``i1 ... id`` is
the canonical reduced word of ``pi(u)`` and ``c`` lies in the torsion group
C = (Z/2)^n generated by ``c_j = s_j^2``.

Multiplication uses three rules:

* ``s_i c s_i^{-1} = r_i(c)``, where ``c_beta`` is the coroot of ``beta``
  reduced mod 2;
* ``s_i^2 = c_i``;
* lifts of two reduced words of the same Weyl element are equal (the
  braid relations hold for the ``s_i``).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .errors import ElementParseError
from .rootsys import RootSystem, coroot, reflect
from .weyl import WeylElement, WeylGroup, bruhat_subword_positions, enumerate_group, word_str


@dataclass(frozen=True, order=True)
class CVector:
    """Element ``c_1^{b_1} ... c_n^{b_n}`` of C stored as the bitmask sum b_j 2^(j-1)."""

    mask: int
    rank: int

    @classmethod
    def identity(cls, rank: int) -> "CVector":
        return cls(0, rank)

    @classmethod
    def unit(cls, j: int, rank: int) -> "CVector":
        """``c_j`` for 1-based ``j``."""
        return cls(1 << (j - 1), rank)

    @classmethod
    def from_bits(cls, bits) -> "CVector":
        bits = tuple(bits)
        return cls(sum((b & 1) << k for k, b in enumerate(bits)), len(bits))

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.mask >> k) & 1 for k in range(self.rank))

    def __mul__(self, other: "CVector") -> "CVector":
        return CVector(self.mask ^ other.mask, self.rank)

    def __bool__(self):
        return self.mask != 0

    def __str__(self):
        if not self.mask:
            return "1"
        return " ".join(f"c{k + 1}" for k in range(self.rank) if self.mask >> k & 1)


@dataclass(frozen=True)
class UElement:
    w: WeylElement
    c: CVector

    @property
    def length(self) -> int:
        return self.w.length

    @property
    def key(self) -> tuple[int, int]:
        """Stable vertex id: (Weyl BFS id, C bitmask)."""
        return (self.w.id, self.c.mask)

    def __str__(self):
        if not self.w.word:
            return str(self.c)
        if not self.c:
            return word_str(self.w.word)
        return f"{word_str(self.w.word)} {self.c}"

    def __lt__(self, other):
        return self.key < other.key


def croot_vector(rs: RootSystem, beta) -> CVector:
    """``c_beta``: the coroot of ``beta`` in the simple coroot basis, mod 2."""
    return CVector.from_bits(m % 2 for m in coroot(rs, beta))


@lru_cache(maxsize=None)
def _conj_columns(rs: RootSystem) -> tuple[tuple[int, ...], ...]:
    # cols[i-1][j-1] = mask of s_i c_j s_i^{-1} = c_{r_i(alpha_j)}
    n = rs.rank
    return tuple(
        tuple(croot_vector(rs, reflect(rs, i, rs.simple_root(j))).mask for j in range(1, n + 1))
        for i in range(1, n + 1)
    )


def conj_c_by_s(rs: RootSystem, i: int, c: CVector) -> CVector:
    """``s_i c s_i^{-1}``; also equal to ``s_i^{-1} c s_i`` since ``s_i^2`` is central in C."""
    cols = _conj_columns(rs)[i - 1]
    out = 0
    m = c.mask
    j = 0
    while m:
        if m & 1:
            out ^= cols[j]
        m >>= 1
        j += 1
    return CVector(out, c.rank)


class LiftedGroup:
    """U for a given root system, with its Weyl group enumerated once."""

    def __init__(self, rs: RootSystem, wg: WeylGroup | None = None):
        self.rs = rs
        self.wg = wg if wg is not None else enumerate_group(rs)
        self.rank = rs.rank
        self._cols = _conj_columns(rs)

    # -- arithmetic ----------------------------------------------------

    def conj(self, i: int, mask: int) -> int:
        cols = self._cols[i - 1]
        out = 0
        j = 0
        while mask:
            if mask & 1:
                out ^= cols[j]
            mask >>= 1
            j += 1
        return out

    def element(self, w: WeylElement, c: CVector | int = 0) -> UElement:
        if isinstance(c, int):
            c = CVector(c, self.rank)
        return UElement(w, c)

    def times_s(self, u: UElement, i: int) -> UElement:
        """Right multiplication by ``s_i``."""
        # s_word c s_i = s_word s_i r_i(c)
        mask = self.conj(i, u.c.mask)
        w2 = self.wg.times_r(u.w, i)
        if w2.length < u.w.length:
            # s_word = s_word' s_i with word' reduced for w r_i, and s_i s_i = c_i
            mask ^= 1 << (i - 1)
        return UElement(w2, CVector(mask, self.rank))

    def times_c(self, u: UElement, c: CVector) -> UElement:
        return UElement(u.w, u.c * c)

    def normal_form(self, word=(), c: CVector | int = 0) -> UElement:
        """Normal form of the product ``s_{word[0]} ... s_{word[-1]} c``."""
        u = UElement(self.wg.identity, CVector(0, self.rank))
        for i in word:
            u = self.times_s(u, i)
        if isinstance(c, int):
            c = CVector(c, self.rank)
        return self.times_c(u, c)

    def from_tokens(self, tokens) -> UElement:
        """Evaluate a product given as ``[("s", i) | ("c", j), ...]`` left to right."""
        u = UElement(self.wg.identity, CVector(0, self.rank))
        for kind, i in tokens:
            if kind == "s":
                u = self.times_s(u, i)
            else:
                u = self.times_c(u, CVector.unit(i, self.rank))
        return u

    def multiply(self, a: UElement, b: UElement) -> UElement:
        u = a
        for i in b.w.word:
            u = self.times_s(u, i)
        return self.times_c(u, b.c)

    def project(self, u: UElement) -> WeylElement:
        return u.w

    def left_c(self, c: CVector, u: UElement) -> UElement:
        """``c * u`` in normal form."""
        return self.multiply(UElement(self.wg.identity, c), u)

    # -- structure -----------------------------------------------------

    def elements(self) -> list[UElement]:
        """All of U ordered by (Weyl id, C mask)."""
        n = 1 << self.rank
        return [UElement(w, CVector(m, self.rank)) for w in self.wg for m in range(n)]

    def covers_below(self, u: UElement) -> list[tuple[int, int, UElement]]:
        """``(i, kind, v)`` for every ``v = u_i^kind`` covered by ``u``."""
        word = u.w.word
        out = []
        for i, _ in bruhat_subword_positions(self.wg, u.w):
            head, letter, tail = word[: i - 1], word[i - 1], word[i:]
            u0 = self.normal_form(head + tail, u.c)
            tokens = [("s", j) for j in head] + [("c", letter)] + [("s", j) for j in tail]
            u1 = self.times_c(self.from_tokens(tokens), u.c)
            out.append((i, 0, u0))
            out.append((i, 1, u1))
        return out

    def order_graph(self) -> "UOrderGraph":
        vertices = self.elements()
        edges = []
        for u in vertices:
            for i, kind, v in self.covers_below(u):
                edges.append(OrderEdge(u, v, i, kind))
        return UOrderGraph(self, vertices, edges)

    # -- text ----------------------------------------------------------

    def parse(self, text: str) -> UElement:
        return self.from_tokens(parse_element(text, self.rank))


def parse_element(text: str, rank: int) -> list[tuple[str, int]]:
    """Tokenize strings such as ``"s1 s2 c1"``; ``"1"`` and ``""`` denote the identity."""
    tokens = []
    for tok in text.replace("*", " ").replace("·", " ").split():
        if tok == "1":
            continue
        kind, digits = tok[:1].lower(), tok[1:].lstrip("_")
        if kind not in ("s", "c") or not digits.isdigit():
            raise ElementParseError(f"unknown token {tok!r} in {text!r}")
        i = int(digits)
        if not 1 <= i <= rank:
            raise ElementParseError(f"index {i} in {tok!r} out of range 1..{rank}")
        tokens.append((kind, i))
    return tokens


def split_element(text: str, rank: int) -> tuple[tuple[int, ...], CVector]:
    """The s-word and the accumulated C-part of an element string, in the
    order written (c-tokens are not yet moved past s-tokens)."""
    word = []
    c = CVector(0, rank)
    for kind, i in parse_element(text, rank):
        if kind == "s":
            word.append(i)
        else:
            c = c * CVector.unit(i, rank)
    return tuple(word), c


@dataclass(frozen=True)
class OrderEdge:
    upper: UElement
    lower: UElement
    position: int
    kind: int


class UOrderGraph:
    """Cover graph of the order on U; the order itself is its transitive closure."""

    def __init__(self, group: LiftedGroup, vertices, edges):
        self.group = group
        self.vertices = vertices
        self.edges = edges

    def covers(self) -> set[tuple[tuple[int, int], tuple[int, int]]]:
        return {(e.lower.key, e.upper.key) for e in self.edges}

    def below(self, u: UElement) -> set[UElement]:
        """Everything strictly below ``u``."""
        down: dict[UElement, list[UElement]] = {}
        for e in self.edges:
            down.setdefault(e.upper, []).append(e.lower)
        seen = set()
        stack = [u]
        while stack:
            x = stack.pop()
            for y in down.get(x, ()):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    def to_dict(self) -> dict:
        return {
            "type": str(self.group.rs.lie_type),
            "vertices": [
                {"id": list(u.key), "label": str(u), "length": u.length} for u in self.vertices
            ],
            "edges": [
                {"from": list(e.upper.key), "to": list(e.lower.key), "position": e.position, "kind": e.kind}
                for e in self.edges
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_dot(self) -> str:
        return order_dot(
            f"U_{self.group.rs.lie_type}",
            [(_node_id(u), str(u), u.length) for u in self.vertices],
            [(_node_id(e.upper), _node_id(e.lower), f"{e.position}/{e.kind}") for e in self.edges],
        )


# one colour per length, cycling
_PALETTE = ["blue", "red", "green", "orange", "purple", "brown", "magenta", "cyan", "gray"]


def _node_id(u: UElement) -> str:
    return f"u{u.w.id}_{u.c.mask}"


def order_dot(name, nodes, edges) -> str:
    """DOT digraph: ``nodes`` are (id, label, rank) and edges (upper, lower, label)."""
    lines = [f'digraph "{name}" {{', "  node [shape=box];"]
    ranks: dict[int, list[str]] = {}
    for nid, label, r in nodes:
        color = _PALETTE[r % len(_PALETTE)]
        lines.append(f'  {nid} [label="{label}", color={color}, fontcolor={color}];')
        ranks.setdefault(r, []).append(nid)
    for r in sorted(ranks):
        lines.append("  { rank=same; " + " ".join(ranks[r]) + "; }")
    for upper, lower, label in edges:
        attr = f' [label="{label}"]' if label else ""
        lines.append(f"  {upper} -> {lower}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# Module-level forms of the operations, for callers holding (rs, wg).

def normal_form(rs: RootSystem, wg: WeylGroup, word, c: CVector | int = 0) -> UElement:
    return LiftedGroup(rs, wg).normal_form(word, c)


def covers_below(rs: RootSystem, wg: WeylGroup, u: UElement):
    return LiftedGroup(rs, wg).covers_below(u)


def order_graph(rs: RootSystem, wg: WeylGroup) -> UOrderGraph:
    return LiftedGroup(rs, wg).order_graph()
