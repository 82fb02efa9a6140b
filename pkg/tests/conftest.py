from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from skewaqc.codefile import eqn4_code, eqn7_code
from skewaqc.codes import AdditiveCodeF4, LinearCodeF4

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

f4 = st.integers(min_value=0, max_value=3)
nonzero_f4 = st.integers(min_value=1, max_value=3)


def vectors(n: int):
    return st.tuples(*([f4] * n))


@st.composite
def additive_codes(draw, n_min: int = 1, n_max: int = 5, kappa_max: int = 8):
    n = draw(st.integers(n_min, n_max))
    k = draw(st.integers(0, min(2 * n, kappa_max)))
    rows = [draw(vectors(n)) for _ in range(k)]
    return AdditiveCodeF4(n, rows)


@st.composite
def linear_codes(draw, n_min: int = 1, n_max: int = 5, k_max: int = 3):
    n = draw(st.integers(n_min, n_max))
    rows: list[tuple[int, ...]] = []
    for _ in range(draw(st.integers(1, min(n, k_max)))):
        v = draw(vectors(n))
        try:
            LinearCodeF4(n, rows + [v])
        except ValueError:
            continue
        rows.append(v)
    if not rows:
        rows = [(1,) * n]
    return LinearCodeF4(n, rows)


@pytest.fixture
def eqn4():
    return eqn4_code()


@pytest.fixture
def eqn7():
    return eqn7_code()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:  # pragma: no cover
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS):
            terminalreporter.write_line(line)
