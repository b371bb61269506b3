"""Shared fixtures, and the one-line-per-criterion acceptance summary."""
import re

import pytest

from cellhom.rootsys import build_root_system
from cellhom.ugroup import LiftedGroup

_CRITERIA = {
    1: "A2 compact homology (Z, Z/2, 0, Z) in < 1 s",
    2: "G2 compact homology (Z, Z/2, 0, Z^2, Z/2, 0, Z) in < 1 s",
    3: "boundary golden strings for A2 and G2",
    4: "sigma intermediate values",
    5: "conjugation identities in U",
    6: "property suite on every supported type and both spaces",
    7: "SNF agrees with gcds of minors on >= 1000 random matrices",
}
_results: dict[int, list[tuple[str, str]]] = {}
_pat = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_")


@pytest.fixture(scope="session")
def groups():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = LiftedGroup(build_root_system(name))
        return cache[name]

    return get


def pytest_runtest_logreport(report):
    m = _pat.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _results.setdefault(int(m.group(1)), []).append((report.nodeid, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k, desc in _CRITERIA.items():
        res = _results.get(k)
        if not res:
            tr.write_line(f"NOT RUN  criterion {k}: {desc}")
            continue
        failed = [nid.split("::")[-1] for nid, out in res if out != "passed"]
        status = "PASS" if not failed else "FAIL"
        extra = f"  [{len(res) - len(failed)}/{len(res)} checks; failing: {', '.join(failed)}]" if failed else f"  [{len(res)} checks]"
        tr.write_line(f"{status} criterion {k}: {desc}{extra}")
