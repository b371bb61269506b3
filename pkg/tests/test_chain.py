import json
from fractions import Fraction

import pytest

from cellhom.chain import (
    build_complex,
    boundary_of_cell,
    flag_boundary_of_cell,
    render_boundary,
    render_complex,
    render_word,
    sigma,
)
from cellhom.errors import BoundarySquareError, NonReducedWordError
from cellhom.rootsys import build_root_system
from cellhom.ugroup import CVector, UElement

# types where the boundary squares to zero with every orientation factor +1
GOOD = [("A1", "compact"), ("A1", "flag"), ("A2", "compact"), ("A2", "flag"),
        ("B2", "compact"), ("B2", "flag"), ("C2", "compact"), ("C2", "flag"),
        ("G2", "compact"), ("G2", "flag"), ("A3", "flag")]
# and where it does not
BAD = [("A3", "compact"), ("A4", "compact"), ("A4", "flag")]


@pytest.fixture(scope="module")
def complexes():
    return {key: build_complex(key[0], key[1]) for key in GOOD}


def test_render_word():
    assert render_word(()) == "1"
    assert render_word((1, 2)) == "s1 s2"
    assert render_word((1, 2, 1, 2)) == "(s1 s2)^2"
    assert render_word((1, 2, 1, 2, 1)) == "(s1 s2)^2 s1"
    assert render_word((2, 1, 2, 1, 2, 1)) == "(s2 s1)^3"
    assert render_word((3, 2, 1)) == "s3 s2 s1"
    assert render_word((1, 2), "r") == "r1 r2"


def test_sigma_rejects_bad_input():
    rs = build_root_system("A2")
    with pytest.raises(IndexError):
        sigma(rs, (1, 2), 3)
    with pytest.raises(NonReducedWordError):
        sigma(rs, (1, 1), 1)


def test_sigma_last_position_is_zero():
    rs = build_root_system("G2")
    for word in [(1,), (2, 1), (1, 2, 1, 2)]:
        assert sigma(rs, word, len(word)) == 0


# Independent sigma: Gram matrix from explicit Euclidean coordinates, no Cartan matrix.
_GRAM = {
    # alpha1 = (1,-1,0), alpha2 = (0,1,-1)
    "A2": ((2, -1), (-1, 2)),
    # alpha1 = (1/2, -sqrt3/2), alpha2 = (0, sqrt3)
    "G2": ((1, Fraction(-3, 2)), (Fraction(-3, 2), 3)),
}


def _euclid_sigma(name, word, i):
    g = _GRAM[name]
    n = len(g)

    def ip(x, y):
        return sum(Fraction(x[a]) * y[b] * g[a][b] for a in range(n) for b in range(n))

    def refl(k, x):
        e = [0] * n
        e[k - 1] = 1
        f = 2 * ip(x, e) / ip(e, e)
        return tuple(Fraction(x[a]) - (f if a == k - 1 else 0) for a in range(n))

    suffix = word[i:]
    roots = []
    for k, letter in enumerate(suffix):
        x = tuple(1 if a == letter - 1 else 0 for a in range(n))
        for j in reversed(suffix[:k]):
            x = refl(j, x)
        roots.append(x)
    a = tuple(1 if b == word[i - 1] - 1 else 0 for b in range(n))
    return sum(2 * ip(a, r) / ip(a, a) for r in roots)


@pytest.mark.parametrize("name", ["A2", "G2"])
def test_sigma_against_euclidean(groups, name):
    g = groups(name)
    for w in g.wg:
        for i in range(1, w.length + 1):
            assert sigma(g.rs, w.word, i) == _euclid_sigma(name, w.word, i)


def test_a2_flag_entries_are_plus_minus_two(groups, complexes):
    g = groups("A2")
    cx = complexes[("A2", "flag")]
    vals = {v for d in cx.boundary for v in cx.boundary[d].entries.values()}
    assert vals <= {2, -2} and vals
    # entry for deleting position i is 2(-1)^i when sigma is odd, else 0
    for w in g.wg:
        for i, v, val in flag_boundary_of_cell(g, w):
            s = _euclid_sigma("A2", w.word, i)
            assert val == (2 * (-1) ** i if s % 2 else 0)


@pytest.mark.parametrize("key", GOOD)
def test_square_zero(complexes, key):
    cx = complexes[key]
    assert cx.validated
    for d in range(2, cx.top_dim + 1):
        assert cx.delta(d - 1).matmul(cx.delta(d)).is_zero()


@pytest.mark.parametrize("key", BAD)
def test_square_nonzero_is_a_named_error(key):
    with pytest.raises(BoundarySquareError) as info:
        build_complex(key[0], key[1])
    err = info.value
    assert err.value != 0 and err.top and err.bottom
    assert err.top in str(err) and err.bottom in str(err)
    # unchecked build still succeeds, but is not usable for homology
    assert not build_complex(key[0], key[1], check=False).validated


@pytest.mark.parametrize("key", GOOD)
def test_cell_counts_and_euler(complexes, groups, key):
    cx = complexes[key]
    g = groups(key[0])
    mult = (1 << g.rank) if key[1] == "compact" else 1
    by_len = g.wg.by_length
    assert cx.dims == [mult * len(by_len[d]) for d in range(len(by_len))]
    assert cx.euler_characteristic() == 0


@pytest.mark.parametrize("key", [k for k in GOOD if k[1] == "flag"])
def test_flag_even(complexes, key):
    cx = complexes[key]
    assert all(v % 2 == 0 for d in cx.boundary for v in cx.boundary[d].entries.values())


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3"])
def test_coefficients_are_units(groups, name):
    g = groups(name)
    for u in g.elements():
        for bc in boundary_of_cell(g, u):
            assert bc.value in (1, -1)
            assert bc.epsilon == 1
            assert (bc.sigma is None) == (bc.kind == 0)


@pytest.mark.parametrize("key", [k for k in GOOD if k[1] == "compact"])
def test_boundary_equivariance(complexes, groups, key):
    # column of u c is the column of u with every row shifted by c
    cx = complexes[key]
    g = groups(key[0])
    n = g.rank
    for d in range(1, cx.top_dim + 1):
        cols: dict[int, dict] = {}
        for (r, c), v in cx.delta(d).entries.items():
            cols.setdefault(c, {})[r] = v
        cells, rows = cx.cells_by_dim[d], cx.index[d - 1]
        lower = cx.cells_by_dim[d - 1]
        for k, u in enumerate(cells):
            if u.c.mask:
                continue
            for m in range(1, 1 << n):
                shift = CVector(m, n)
                uc = cx.index[d][UElement(u.w, shift)]
                moved = {rows[UElement(lower[r].w, lower[r].c * shift)]: v for r, v in cols.get(k, {}).items()}
                assert cols.get(uc, {}) == moved


def test_c_parts_render(groups):
    g = groups("A2")
    assert render_boundary(g, g.parse("s1 c1")) == "1 - c1"
    assert render_boundary(g, g.parse("1")) == "0"
    # c1 s2 = s2 c1 c2 and delta(s2) c1 c2 = (c2 - 1) c1 c2
    assert render_boundary(g, g.parse("c1 s2")) == "c1 - c1 c2"


def test_render_complex_lines(groups, complexes):
    text = render_complex(complexes[("A2", "compact")], groups("A2"))
    lines = text.splitlines()
    assert len(lines) == 8 + 8 + 4
    assert "B(s1 s2) -> B(s1)(1 - c2) - B(s2)(1 + c1 c2)" in lines
    flag = render_complex(complexes[("A2", "flag")], groups("A2")).splitlines()
    assert "B(r1 r2) -> 2 B(r2)" in flag or "B(r1 r2) -> -2 B(r2)" in flag


def test_json_layout(complexes):
    d = json.loads(complexes[("A1", "compact")].to_json())
    assert d["space"] == "compact" and d["type"] == "A1" and d["dims"] == [2, 2]
    # delta B(s1) = c1 - 1, delta B(s1 c1) = 1 - c1
    assert d["boundaries"] == [{"d": 1, "entries": [[0, 0, -1], [0, 1, 1], [1, 0, 1], [1, 1, -1]]}]
    assert d["cells"][1]["cells"] == ["s1", "s1 c1"]


def test_json_is_stable():
    a = build_complex("G2", "compact").to_json()
    b = build_complex("G2", "compact").to_json()
    assert a == b
