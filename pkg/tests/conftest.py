from __future__ import annotations

import random

import networkx as nx
import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from specdl.graph import Graph, is_connected, pair_order

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def random_connected(rng: random.Random, n: int, p: float | None = None) -> Graph:
    """Random spanning tree plus extra edges: always connected."""
    p = rng.random() if p is None else p
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for u, v in pair_order(n):
        if rng.random() < p:
            edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 9):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    p = draw(st.floats(0.0, 1.0))
    return random_connected(random.Random(seed), n, p)


@st.composite
def any_graphs(draw, min_n: int = 1, max_n: int = 9):
    n = draw(st.integers(min_n, max_n))
    pairs = pair_order(n)
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, b in zip(pairs, bits) if b])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def oracle_dl(g: Graph) -> tuple[np.ndarray, float]:
    """D^L eigenvalues (descending) and W from networkx + LAPACK, independent of specdl."""
    d = np.array(nx.floyd_warshall_numpy(to_nx(g)))
    m = np.diag(d.sum(axis=1)) - d
    return np.sort(np.linalg.eigvalsh(m))[::-1], d.sum() / 2


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


def edges_of(*pairs):
    return [tuple(p) for p in pairs]


PAW = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (2, 3)])
assert is_connected(PAW)


# one line per acceptance criterion, appended by test_acceptance and echoed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
