import sys
from fractions import Fraction
from pathlib import Path

from hypothesis import strategies as st

from taxicab.geometry import Point

sys.path.insert(0, str(Path(__file__).parent))

GOLDEN = Path(__file__).parent / "golden"

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
positive_rationals = st.fractions(min_value=Fraction(1, 12), max_value=20, max_denominator=12)
points = st.builds(Point, rationals, rationals)
nonzero_points = points.filter(lambda p: p != Point(0, 0))


# acceptance bookkeeping: criterion args -> outcome, filled as tests report
_criteria = {}
_criterion_markers = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = _criterion_markers.get(report.nodeid)
    if marker is not None:
        _criteria[marker] = report.outcome


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _criterion_markers[item.nodeid] = m.args


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), outcome in sorted(_criteria.items()):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{verdict}] C{number:<2} {title}")
