import itertools
import os
import pathlib
import sys

import pytest
from hypothesis import strategies as st

from orbit_atlas import Coloring, Involution


def brute_involutions(n):
    """Filter all of S_n for w^2 = Id."""
    return sorted(p for p in itertools.permutations(range(1, n + 1))
                  if all(p[p[i] - 1] == i + 1 for i in range(n)))


@st.composite
def involutions(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    order = draw(st.permutations(range(1, n + 1)))
    n_arcs = draw(st.integers(0, n // 2))
    arcs = [tuple(sorted(order[2 * t:2 * t + 2])) for t in range(n_arcs)]
    return Involution.from_arcs(n, arcs)


@st.composite
def colorings(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    return Coloring.of(draw(st.lists(st.integers(0, 2), min_size=n, max_size=n)))


@pytest.fixture
def golden(request):
    """Compare text with tests/golden/<name>; set UPDATE_GOLDEN=1 to rewrite."""
    root = pathlib.Path(__file__).parent / "golden"

    def check(name, text):
        path = root / name
        if os.environ.get("UPDATE_GOLDEN"):
            path.write_text(text)
        assert path.read_text() == text

    return check


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "STATUS_LINES", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
