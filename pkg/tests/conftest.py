import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from selfisogeny.tau import TauPoly


def make_tau(u1, u2, v2, extra):
    """A valid TauPoly: v1 is pushed below -u1^2 v2 / (4 u2^2) so Delta < 0."""
    v1 = (-u1 * u1 * v2) // (4 * u2 * u2) - extra
    return TauPoly.from_uv(Fraction(u1, u2), Fraction(v1, v2))


@st.composite
def taus(draw, umax=30, dmax=12, extra_max=200):
    return make_tau(
        draw(st.integers(-umax, umax)),
        draw(st.integers(1, dmax)),
        draw(st.integers(1, dmax)),
        draw(st.integers(1, extra_max)),
    )


def random_tau(rng: random.Random, umax=30, dmax=12, extra_max=200) -> TauPoly:
    return make_tau(rng.randint(-umax, umax), rng.randint(1, dmax),
                    rng.randint(1, dmax), rng.randint(1, extra_max))


# one PASS/FAIL line per acceptance criterion in the terminal summary

_criteria = {}


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria[marker] = "PASS" if report.outcome == "passed" else "FAIL"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        outcome.get_result().criterion = mark.args


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), verdict in sorted(_criteria.items()):
        terminalreporter.write_line(f"criterion {number:>2} {verdict}  {title}")
