from __future__ import annotations

import itertools
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from zagreb_bounds.example_graphs import reference_graph
from zagreb_bounds.graph import Graph

# exact-arithmetic examples vary a lot in cost; wall-clock deadlines only add flakiness
settings.register_profile("zagreb", deadline=None)
settings.load_profile("zagreb")

_CRITERIA: list[str] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and (rep.when == "call" or (rep.when == "setup" and not rep.passed)):
        _CRITERIA.append(f"{'PASS' if rep.passed else 'FAIL'}  {marker.args[0]}")


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(len(idx), [(idx[u], idx[v]) for u, v in h.edges()])


def lemma_oracle(xs, j, k):
    """Minimum of the sum of squares with positions j, k fixed and the mean of the rest pinned.

    Written as n*mean^2 plus squared deviations, where the n-2 free values sit at
    their common mean t; tight exactly when they all equal t.
    """
    n = len(xs)
    xs = [Fraction(x) for x in xs]
    mean = sum(xs) / n
    xj, xk = xs[j - 1], xs[k - 1]
    t = (sum(xs) - xj - xk) / (n - 2)
    return n * mean**2 + (xj - mean) ** 2 + (xk - mean) ** 2 + (n - 2) * (t - mean) ** 2


@st.composite
def graphs(draw, min_n=1, max_n=9, min_degree=0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, keep in zip(pairs, chosen) if keep]
    if min_degree:
        # attach every deficient vertex to its successor (or predecessor) until delta >= 1
        present = set(edges)
        deg = [0] * n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        for v in range(n):
            if deg[v] == 0 and n > 1:
                w = (v + 1) % n
                e = (min(v, w), max(v, w))
                if e not in present:
                    present.add(e)
                    deg[v] += 1
                    deg[w] += 1
        edges = sorted(present)
    return Graph.from_edges(n, edges)


@pytest.fixture(scope="session")
def g1():
    return reference_graph("G1")


@pytest.fixture(scope="session")
def g2():
    return reference_graph("G2")


@pytest.fixture(scope="session")
def g3():
    return reference_graph("G3")
