import itertools

import pytest
from hypothesis import strategies as st

from rigidspace.arrow import ArrowPermutation

ACCEPTANCE_LINES: dict[str, str] = {}


@st.composite
def arrow_permutations(draw, n):
    perm = draw(st.permutations(range(1, n + 1)))
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n))
    return ArrowPermutation(tuple(s * t for s, t in zip(signs, perm)))


def brute_force_arrow_perms(n):
    """Signed permutations straight from itertools, for use as an oracle."""
    return [
        ArrowPermutation(tuple(s * t for s, t in zip(signs, perm)))
        for perm in itertools.permutations(range(1, n + 1))
        for signs in itertools.product((1, -1), repeat=n)
    ]


@pytest.fixture
def acceptance():
    """Record one pass/fail line per acceptance criterion."""

    def record(number: int, title: str, ok: bool, detail: str = ""):
        status = "PASS" if ok else "FAIL"
        ACCEPTANCE_LINES[f"{number:02d}"] = f"[{status}] criterion {number}: {title}" + (
            f" -- {detail}" if detail else ""
        )
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
