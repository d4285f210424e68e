from __future__ import annotations

from collections import defaultdict

import networkx as nx
import pytest
from hypothesis import strategies as st

from dslpm.graph_core import Graph

_CRITERIA: dict[str, list[tuple[str, str]]] = defaultdict(list)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return h


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 10, connected: bool = False):
    """Random simple graphs; ``connected=True`` adds a random spanning tree first."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    if connected:
        for v in range(1, n):
            edges.add((draw(st.integers(0, v - 1)), v))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if pairs:
        mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
        edges.update(p for p, keep in zip(pairs, mask) if keep)
    return Graph.from_edges(n, sorted(edges))


@pytest.fixture
def criterion(request):
    """Tag an acceptance test with its criterion id for the end-of-run table."""
    def tag(cid: str) -> None:
        request.node.user_properties.append(("criterion", cid))
    return tag


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    for key, value in report.user_properties:
        if key == "criterion":
            status = "PASS" if report.outcome == "passed" else "FAIL"
            _CRITERIA[value].append((report.nodeid.split("::")[-1], status))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(_CRITERIA, key=lambda c: int(c.split(".")[0])):
        parts = _CRITERIA[cid]
        overall = "PASS" if all(s == "PASS" for _, s in parts) else "FAIL"
        detail = ", ".join(f"{name}={s}" for name, s in parts)
        terminalreporter.write_line(f"criterion {cid}: {overall}  ({detail})")
