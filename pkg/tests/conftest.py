import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cdindex import simplicial  # noqa: E402


def sphere_complexes():
    """Simplicial spheres used throughout: name -> complex."""
    out = {"octahedron": simplicial.octahedron(), "icosahedron": simplicial.icosahedron()}
    for m in range(3, 7):
        out[f"simplex-boundary-{m}"] = simplicial.simplex_boundary(m)
    for k in range(3, 9):
        out[f"bipyramid-{k}"] = simplicial.bipyramid(k)
    return out


SPHERES = sphere_complexes()


@pytest.fixture(params=sorted(SPHERES))
def sphere(request):
    return SPHERES[request.param]


_criteria = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" in report.nodeid and report.when == "call":
        _criteria[report.nodeid.split("::")[1]] = report.outcome
    elif "test_acceptance.py::test_criterion_" in report.nodeid and report.failed:
        _criteria[report.nodeid.split("::")[1]] = "failed"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria, key=lambda s: int(s.split("_")[2])):
        status = "PASS" if _criteria[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {name.split('_')[2]} ({name.split('_', 3)[3]}): {status}")
