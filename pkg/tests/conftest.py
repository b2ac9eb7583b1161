import itertools

import networkx as nx
import pytest

from clawperf.graph import Graph, build

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when != "call":
        return
    n, title = mark.args
    if rep.passed and not hasattr(rep, "wasxfail"):
        status = "PASS"
    elif hasattr(rep, "wasxfail"):
        status = "FAIL (expected: " + str(rep.wasxfail) + ")"
    else:
        status = "FAIL"
    _CRITERIA[n] = f"criterion {n:>2} {title}: {status}"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        terminalreporter.write_line(_CRITERIA[n])


def to_nx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def all_labelled(n):
    """Every labelled graph on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for m in range(1 << len(pairs)):
        yield build(n, [p for i, p in enumerate(pairs) if m >> i & 1])
