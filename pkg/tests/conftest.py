import pytest

from noncover.graph import Graph

ACCEPTANCE_LINES: list[str] = []


def make(spec: str, n: int | None = None) -> Graph:
    """Graph from 1-based edge tokens like ``"12 23"`` (or ``"1-10 2-3"``)."""
    pairs = []
    for tok in spec.split():
        a, b = tok.split("-") if "-" in tok else (tok[0], tok[1])
        pairs.append((int(a) - 1, int(b) - 1))
    if n is None:
        n = max((max(p) for p in pairs), default=-1) + 1
    return Graph.from_edges(n, pairs)


@pytest.fixture
def P3():
    return make("12 23")


@pytest.fixture
def P4():
    return make("12 23 34")


@pytest.fixture
def K13():
    return make("12 13 14")


@pytest.fixture
def K2():
    return make("12")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
