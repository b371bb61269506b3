"""Root systems of split real forms in the simple-root basis.

A root is a tuple of integers ``(m_1, ..., m_n)`` standing for
``m_1 alpha_1 + ... + m_n alpha_n``.  Everything is computed from the
Cartan matrix ``C[i][j] = 2<alpha_i, alpha_j> / <alpha_i, alpha_i>``;
no Euclidean coordinates are kept.

Simple roots are numbered from 1 in the public API (as in ``r_1``, ``s_1``)
and from 0 in the stored tuples.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .errors import InvalidLieType, NotARootError

Root = tuple[int, ...]

FAMILIES = "ABCDEFG"

# Positive root counts, used as a sanity check after closure.
_N_POSITIVE = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        f, n = self.family, self.rank
        ok = (
            (f == "A" and n >= 1)
            or (f in "BC" and n >= 2)
            or (f == "D" and n >= 3)
            or (f == "E" and n in (6, 7, 8))
            or (f == "F" and n == 4)
            or (f == "G" and n == 2)
        )
        if f not in FAMILIES or not ok:
            raise InvalidLieType(f"no Dynkin type {f}{n}")

    def __str__(self):
        return f"{self.family}{self.rank}"


def parse_type(text: str) -> LieType:
    """Parse strings such as ``"A2"``, ``"g2"`` or ``"B 3"``."""
    m = re.fullmatch(r"\s*([A-Za-z])\s*_?\s*(\d+)\s*", text)
    if m is None:
        raise InvalidLieType(f"cannot parse Lie type {text!r}")
    return LieType(m.group(1).upper(), int(m.group(2)))


def cartan_matrix(t: LieType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with Bourbaki numbering.

    For G2 the first simple root is the short one, so ``C[0][1] = -3``.
    """
    n = t.rank
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, cij=-1, cji=-1):
        c[i][j] = cij
        c[j][i] = cji

    f = t.family
    if f in "ABCD":
        for i in range(n - 2):
            link(i, i + 1)
        if f == "A" and n >= 2:
            link(n - 2, n - 1)
        elif f == "B":
            # alpha_n short
            link(n - 2, n - 1, -1, -2)
        elif f == "C":
            # alpha_n long
            link(n - 2, n - 1, -2, -1)
        elif f == "D":
            link(n - 3, n - 1)
    elif f == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif f == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif f == "G":
        link(0, 1, -3, -1)
    return tuple(tuple(row) for row in c)


def _symmetrizer(cartan) -> tuple[int, ...]:
    """Minimal positive integers d with d_i C[i][j] = d_j C[j][i]."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and cartan[i][j] and d[j] is None:
                    d[j] = d[i] * cartan[i][j] / cartan[j][i]
                    stack.append(j)
    scale = lcm(*(x.denominator for x in d))
    ints = [int(x * scale) for x in d]
    # each connected component may be rescaled independently; the Dynkin
    # types here are connected so a global gcd is enough
    g = gcd(*ints)
    return tuple(x // g for x in ints)


def _graded_key(root: Root):
    # height first, then larger coefficients on earlier simple roots first,
    # so that the simple roots come out as alpha_1, alpha_2, ...
    return (sum(root), tuple(-m for m in root))


@dataclass(frozen=True)
class RootSystem:
    lie_type: LieType
    cartan: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[int, ...]
    positive_roots: tuple[Root, ...]
    _positive_set: frozenset = field(repr=False, compare=False, hash=False)

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    def simple_root(self, i: int) -> Root:
        """``alpha_i`` for 1-based ``i``."""
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    def is_root(self, beta) -> bool:
        beta = tuple(beta)
        return beta in self._positive_set or tuple(-m for m in beta) in self._positive_set

    def is_positive(self, beta) -> bool:
        return tuple(beta) in self._positive_set

    def bilinear(self, x, y) -> int:
        """Symmetrized form; proportional to the Killing inner product."""
        n = self.rank
        d, c = self.symmetrizer, self.cartan
        return sum(x[i] * y[j] * d[i] * c[i][j] for i in range(n) for j in range(n) if x[i] and y[j])

    def to_dict(self) -> dict:
        return {
            "type": str(self.lie_type),
            "cartan": [list(row) for row in self.cartan],
            "positive_roots": [list(r) for r in self.positive_roots],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def cartan_pairing(rs: RootSystem, i: int, beta) -> int:
    """``2<alpha_i, beta>/<alpha_i, alpha_i>`` for 1-based ``i``."""
    row = rs.cartan[i - 1]
    return sum(m * row[j] for j, m in enumerate(beta))


def reflect(rs: RootSystem, i: int, beta) -> Root:
    """Simple reflection ``r_i(beta) = beta - <beta, alpha_i^v> alpha_i``."""
    k = cartan_pairing(rs, i, beta)
    out = list(beta)
    out[i - 1] -= k
    return tuple(out)


def build_root_system(t: LieType | str) -> RootSystem:
    if isinstance(t, str):
        t = parse_type(t)
    cartan = cartan_matrix(t)
    n = t.rank
    sym = _symmetrizer(cartan)

    # close the simple roots under simple reflections
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    proto = RootSystem(t, cartan, sym, (), frozenset())
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(1, n + 1):
                gamma = reflect(proto, i, beta)
                if gamma not in seen:
                    seen.add(gamma)
                    nxt.append(gamma)
        frontier = nxt
    positive = sorted((r for r in seen if all(m >= 0 for m in r)), key=_graded_key)
    expected = _N_POSITIVE[t.family](n)
    assert len(positive) == expected, (t, len(positive), expected)
    return RootSystem(t, cartan, sym, tuple(positive), frozenset(positive))


def coroot(rs: RootSystem, beta) -> tuple[int, ...]:
    """Coordinates of ``beta^v = 2 beta / <beta, beta>`` in the simple coroot basis."""
    beta = tuple(beta)
    if not rs.is_root(beta):
        raise NotARootError(f"{beta} is not a root of {rs.lie_type}")
    norm = rs.bilinear(beta, beta)
    out = []
    for m, d in zip(beta, rs.symmetrizer):
        q = Fraction(2 * m * d, norm)
        assert q.denominator == 1
        out.append(int(q))
    return tuple(out)
