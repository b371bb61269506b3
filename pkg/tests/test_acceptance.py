"""Acceptance suite: one group of tests per criterion.

Run with ``pytest tests/test_acceptance.py``; the terminal summary prints a
PASS/FAIL line per criterion (see conftest.py).
"""
import random
import time
from itertools import combinations, permutations
from math import gcd, prod

import numpy as np
import pytest

from cellhom import kernels
from cellhom.chain import boundary_of_cell, build_complex, render_boundary, sigma
from cellhom.rootsys import build_root_system, cartan_pairing
from cellhom.snf import IntMatrix, betti_mod2, homology, rank_mod2, smith_normal_form
from cellhom.ugroup import CVector, LiftedGroup, UElement, conj_c_by_s
from cellhom.weyl import inversion_set

SUPPORTED = ["A1", "A2", "A3", "A4", "B2", "C2", "G2"]
SPACES = ["compact", "flag"]


def _fresh(name):
    return LiftedGroup(build_root_system(name))


def _groups(hs):
    return [(g.free_rank, g.torsion) for g in hs]


# -- 1, 2: homology of SO(3) and SO(4) ----------------------------------------

def test_criterion_1_a2_homology():
    t0 = time.perf_counter()
    hs = homology(build_complex(_fresh("A2"), "compact"))
    elapsed = time.perf_counter() - t0
    assert _groups(hs) == [(1, ()), (0, (2,)), (0, ()), (1, ())]
    assert elapsed < 1.0


def test_criterion_2_g2_homology():
    t0 = time.perf_counter()
    hs = homology(build_complex(_fresh("G2"), "compact"))
    elapsed = time.perf_counter() - t0
    assert _groups(hs) == [(1, ()), (0, (2,)), (0, ()), (2, ()), (0, (2,)), (0, ()), (1, ())]
    assert elapsed < 1.0


# -- 3: boundary strings ---------------------------------------------------------

A2_BOUNDARIES = {
    "s1": "c1 - 1",
    "s2": "c2 - 1",
    "s1 s2": "B(s1)(1 - c2) - B(s2)(1 + c1 c2)",
    "s2 s1": "B(s2)(1 - c1) - B(s1)(1 + c1 c2)",
    "s1 s2 s1": "B(s1 s2)(c1 - 1) + B(s2 s1)(c2 - 1)",
}
G2_BOUNDARIES = {
    "s1": "c1 - 1",
    "s2": "c2 - 1",
    "s1 s2": "B(s1)(1 - c2) - B(s2)(1 + c1 c2)",
    "s2 s1": "B(s2)(1 - c1) - B(s1)(1 + c1 c2)",
    "s1 s2 s1": "B(s1 s2)(c1 - 1) + B(s2 s1)(c2 - 1)",
    "s2 s1 s2": "B(s2 s1)(c2 - 1) + B(s1 s2)(c1 - 1)",
    "s1 s2 s1 s2": "B(s1 s2 s1)(1 - c2) + B(s2 s1 s2)(c2 - 1)",
    "s2 s1 s2 s1": "B(s2 s1 s2)(1 - c1) + B(s1 s2 s1)(c1 - 1)",
    "s1 s2 s1 s2 s1": "B((s1 s2)^2)(c1 - 1) - B((s2 s1)^2)(1 + c1 c2)",
    "s2 s1 s2 s1 s2": "B((s2 s1)^2)(c2 - 1) - B((s1 s2)^2)(1 + c1 c2)",
    "s1 s2 s1 s2 s1 s2": "B((s1 s2)^2 s1)(1 - c2) + B((s2 s1)^2 s2)(c1 - 1)",
}


@pytest.mark.parametrize("cell", list(A2_BOUNDARIES))
def test_criterion_3_a2_boundary(cell):
    g = _fresh("A2")
    assert render_boundary(g, g.parse(cell)) == A2_BOUNDARIES[cell]


@pytest.mark.parametrize("cell", list(G2_BOUNDARIES))
def test_criterion_3_g2_boundary(cell):
    g = _fresh("G2")
    assert render_boundary(g, g.parse(cell)) == G2_BOUNDARIES[cell]


# -- 4: sigma ----------------------------------------------------------------------

# (word, position, value) as worked by hand; an empty inversion set gives 0
A2_SIGMA = [
    ((1,), 1, 0),
    ((2,), 1, 0),
    ((1, 2), 2, 0), ((1, 2), 1, -1),
    ((2, 1), 2, 0), ((2, 1), 1, -1),
    ((1, 2, 1), 3, 0), ((1, 2, 1), 1, 0),
]
G2_SIGMA = [
    ((1, 2), 1, -3),
    ((2, 1), 1, -1),
    ((1, 2, 1), 1, -4),
    ((2, 1, 2), 1, -2),
    ((1, 2, 1, 2), 1, -4),
    ((2, 1, 2, 1), 1, -4),
    ((1, 2, 1, 2, 1), 1, -3),
    ((2, 1, 2, 1, 2), 1, -1),
    ((1, 2, 1, 2, 1, 2), 1, 0),
] + [(w, len(w), 0) for w in [(1,), (2,), (1, 2), (2, 1), (1, 2, 1), (2, 1, 2), (1, 2, 1, 2),
                              (2, 1, 2, 1), (1, 2, 1, 2, 1), (2, 1, 2, 1, 2), (1, 2, 1, 2, 1, 2)]]


def _wid(case):
    w, i, _ = case
    return "".join(map(str, w)) + f"-{i}"


@pytest.mark.parametrize("case", A2_SIGMA, ids=[_wid(c) for c in A2_SIGMA])
def test_criterion_4_a2_sigma(case):
    word, i, want = case
    assert sigma(build_root_system("A2"), word, i) == want


@pytest.mark.parametrize("case", G2_SIGMA, ids=[_wid(c) for c in G2_SIGMA])
def test_criterion_4_g2_sigma(case):
    word, i, want = case
    assert sigma(build_root_system("G2"), word, i) == want


def test_g2_sigma_2121_from_its_summands():
    # the three hand-evaluated summands for (s2 s1)^2 at i = 1 are -1, -1 and 0
    rs = build_root_system("G2")
    inv = inversion_set(rs, (1, 2, 1))
    assert inv == [(1, 0), (3, 1), (2, 1)]
    assert [cartan_pairing(rs, 2, b) for b in inv] == [-1, -1, 0]
    assert sigma(rs, (2, 1, 2, 1), 1) == -2
    # parity, and so the boundary, agrees with the hand-computed -4
    assert sigma(rs, (2, 1, 2, 1), 1) % 2 == (-4) % 2


# -- 5: conjugation identities --------------------------------------------------------

def test_criterion_5_g2_s1_c2():
    rs = build_root_system("G2")
    assert conj_c_by_s(rs, 1, CVector.unit(2, 2)) == CVector(0b11, 2)


def test_criterion_5_g2_s2_c1():
    rs = build_root_system("G2")
    assert conj_c_by_s(rs, 2, CVector.unit(1, 2)) == CVector(0b11, 2)


def test_criterion_5_a2_c1_s2():
    g = _fresh("A2")
    assert g.parse("c1 s2") == g.parse("s2 c1 c2")
    assert str(g.parse("c1 s2")) == "s2 c1 c2"


# -- 6: property suite ------------------------------------------------------------------

CASES = [(t, s) for t in SUPPORTED for s in SPACES]
_IDS = [f"{t}-{s}" for t, s in CASES]


def _timed(fn):
    t0 = time.perf_counter()
    fn()
    assert time.perf_counter() - t0 < 5.0


@pytest.mark.parametrize("name,space", CASES, ids=_IDS)
def test_criterion_6_square_zero(name, space):
    def body():
        cx = build_complex(_fresh(name), space, check=False)
        for d in range(2, cx.top_dim + 1):
            prod_ = cx.delta(d - 1).matmul(cx.delta(d))
            assert prod_.is_zero(), f"delta_{d - 1} delta_{d} has {len(prod_.entries)} nonzero entries"
    _timed(body)


@pytest.mark.parametrize("name", SUPPORTED)
def test_criterion_6_inversion_sizes(name):
    def body():
        g = _fresh(name)
        for w in g.wg:
            assert len(set(inversion_set(g.rs, w.word))) == w.length
    _timed(body)


@pytest.mark.parametrize("name,space", CASES, ids=_IDS)
def test_criterion_6_cell_counts_and_euler(name, space):
    def body():
        g = _fresh(name)
        cx = build_complex(g, space, check=False)
        mult = (1 << g.rank) if space == "compact" else 1
        by_len = g.wg.by_length
        assert cx.dims == [mult * len(by_len[d]) for d in range(len(by_len))]
        assert cx.euler_characteristic() == 0
    _timed(body)


@pytest.mark.parametrize("name", SUPPORTED)
def test_criterion_6_equivariance(name):
    def body():
        g = _fresh(name)
        n = g.rank
        for w in g.wg:
            base = boundary_of_cell(g, UElement(w, CVector(0, n)))
            for m in range(1, 1 << n):
                c = CVector(m, n)
                got = [(b.position, b.kind, b.v, b.value) for b in boundary_of_cell(g, UElement(w, c))]
                assert got == [(b.position, b.kind, UElement(b.v.w, b.v.c * c), b.value) for b in base]
        # and on the assembled matrices
        cx = build_complex(g, "compact", check=False)
        for d in range(1, cx.top_dim + 1):
            ent = cx.delta(d).entries
            lower, upper = cx.cells_by_dim[d - 1], cx.cells_by_dim[d]
            rows, cols = cx.index[d - 1], cx.index[d]
            for (r, k), v in ent.items():
                for m in range(1, 1 << n):
                    c = CVector(m, n)
                    key = (rows[UElement(lower[r].w, lower[r].c * c)], cols[UElement(upper[k].w, upper[k].c * c)])
                    assert ent.get(key) == v
    _timed(body)


@pytest.mark.parametrize("name", SUPPORTED)
def test_criterion_6_flag_mod2(name):
    def body():
        g = _fresh(name)
        cx = build_complex(g, "flag", check=False)
        assert all(v % 2 == 0 for d in cx.boundary for v in cx.boundary[d].entries.values())
        ranks = {d: rank_mod2(cx.delta(d)) for d in range(1, cx.top_dim + 1)}
        dims = cx.dims
        betti = [dims[k] - ranks.get(k, 0) - ranks.get(k + 1, 0) for k in range(len(dims))]
        assert sum(betti) == len(g.wg)
    _timed(body)


def _rot(n, i):
    m = np.eye(n, dtype=int)
    m[i - 1, i - 1] = m[i, i] = 0
    m[i - 1, i], m[i, i - 1] = 1, -1
    return m


def test_criterion_6_a2_matrix_oracle():
    def body():
        g = _fresh("A2")
        s = {i: _rot(3, i) for i in (1, 2)}

        def phi(u):
            out = np.eye(3, dtype=int)
            for i in u.w.word:
                out = out @ s[i]
            for j in (1, 2):
                if u.c.mask >> (j - 1) & 1:
                    out = out @ s[j] @ s[j]
            return out

        els = g.elements()
        assert len(els) == 24
        img = {u: phi(u) for u in els}
        assert len({m.tobytes() for m in img.values()}) == 24
        for a in els:
            for b in els:
                assert np.array_equal(img[g.multiply(a, b)], img[a] @ img[b])
    _timed(body)


# -- 7: SNF against determinantal divisors ---------------------------------------------

def _det(m):
    n = len(m)
    total = 0
    for p in permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if p[a] > p[b])
        total += (-1) ** inv * prod(m[i][p[i]] for i in range(n))
    return total


def _divisors(m):
    r, c = len(m), len(m[0])
    out = []
    for k in range(1, min(r, c) + 1):
        g = 0
        for rs in combinations(range(r), k):
            for cs in combinations(range(c), k):
                g = gcd(g, _det([[m[a][b] for b in cs] for a in rs]))
        if g == 0:
            break
        out.append(g)
    return out


@pytest.mark.parametrize("backend", kernels.available_backends())
def test_criterion_7_snf_oracle(backend):
    rng = random.Random(20240611)
    for _ in range(1000):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        m = [[rng.randint(-5, 5) for _ in range(c)] for _ in range(r)]
        f = smith_normal_form(IntMatrix.from_dense(m), backend)
        d = _divisors(m)
        assert len(f) == len(d), m
        for k in range(len(f)):
            assert prod(f[: k + 1]) == d[k], m
