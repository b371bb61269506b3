"""Invariant checks shared by the ``check`` command and the test-suite."""
from __future__ import annotations

from dataclasses import dataclass

from .chain import COMPACT, FLAG, boundary_of_cell, build_complex
from .errors import BoundarySquareError
from .rootsys import RootSystem, cartan_pairing, reflect
from .snf import betti_mod2
from .ugroup import CVector, LiftedGroup, UElement
from .weyl import inversion_set


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        tail = f" ({self.detail})" if self.detail else ""
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}{tail}"


def check_cartan(rs: RootSystem) -> CheckResult:
    n = rs.rank
    ok = all(
        cartan_pairing(rs, i, rs.simple_root(j)) == rs.cartan[i - 1][j - 1]
        for i in range(1, n + 1)
        for j in range(1, n + 1)
    )
    return CheckResult("cartan pairing on simple roots", ok)


def check_reflection_permutes(rs: RootSystem) -> CheckResult:
    pos = set(rs.positive_roots)
    for i in range(1, rs.rank + 1):
        a = rs.simple_root(i)
        rest = pos - {a}
        if {reflect(rs, i, b) for b in rest} != rest:
            return CheckResult("r_i permutes positive roots other than alpha_i", False, f"i={i}")
    return CheckResult("r_i permutes positive roots other than alpha_i", True)


def check_inversions(group: LiftedGroup) -> CheckResult:
    rs, wg = group.rs, group.wg
    for w in wg:
        if len(set(inversion_set(rs, w.word))) != w.length:
            return CheckResult("|Pi_w| = l(w)", False, str(w))
    if wg.longest.length != len(rs.positive_roots):
        return CheckResult("|Pi_w| = l(w)", False, "longest element")
    return CheckResult("|Pi_w| = l(w)", True)


def check_poincare(group: LiftedGroup) -> CheckResult:
    val = sum((-1) ** w.length for w in group.wg)
    return CheckResult("W(-1) = 0", val == 0, f"got {val}" if val else "")


def check_cover_equivariance(group: LiftedGroup) -> CheckResult:
    """covers and coefficients of u c are those of u, times c on the right."""
    n = group.rank
    for w in group.wg:
        base = boundary_of_cell(group, UElement(w, CVector(0, n)))
        for m in range(1, 1 << n):
            c = CVector(m, n)
            got = boundary_of_cell(group, UElement(w, c))
            want = [(b.position, b.kind, UElement(b.v.w, b.v.c * c), b.value) for b in base]
            if [(b.position, b.kind, b.v, b.value) for b in got] != want:
                return CheckResult("right C-equivariance of covers", False, f"{w} {c}")
    return CheckResult("right C-equivariance of covers", True)


def check_complex(group: LiftedGroup, space: str) -> list[CheckResult]:
    out = []
    try:
        cx = build_complex(group, space)
    except BoundarySquareError as exc:
        return [CheckResult("delta o delta = 0", False, str(exc))]
    out.append(CheckResult("delta o delta = 0", True))
    mult = (1 << group.rank) if space == COMPACT else 1
    by_len = group.wg.by_length
    want = [mult * len(by_len[d]) for d in sorted(by_len)]
    out.append(CheckResult("cell counts", cx.dims == want, f"{cx.dims}"))
    chi = cx.euler_characteristic()
    if group.rank:
        out.append(CheckResult("euler characteristic 0", chi == 0, f"got {chi}" if chi else ""))
    if space == FLAG:
        even = all(v % 2 == 0 for d in cx.boundary for v in cx.boundary[d].entries.values())
        out.append(CheckResult("flag boundaries = 0 mod 2", even))
        b2 = sum(betti_mod2(cx))
        out.append(CheckResult("mod-2 Betti sum = |W|", b2 == len(group.wg), f"{b2}"))
    return out


def run_checks(rs: RootSystem, space: str = COMPACT) -> list[CheckResult]:
    group = LiftedGroup(rs)
    out = [
        check_cartan(rs),
        check_reflection_permutes(rs),
        check_inversions(group),
        check_poincare(group),
    ]
    if space == COMPACT:
        out.append(check_cover_equivariance(group))
    out.extend(check_complex(group, space))
    return out
