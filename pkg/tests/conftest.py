import random
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from chromadisc import Graph, mycielski_graph

settings.register_profile(
    "suite", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
settings.load_profile("suite")


@pytest.fixture
def c5():
    return Graph.cycle(5)


@pytest.fixture
def petersen():
    return Graph.petersen()


@pytest.fixture
def groetzsch():
    return mycielski_graph(4).graph


@pytest.fixture
def k4():
    return Graph.complete(4)


@pytest.fixture
def k33():
    return Graph.complete_bipartite(3, 3)


@st.composite
def graphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    mask = draw(st.integers(0, 2 ** (n * (n - 1) // 2) - 1))
    edges, idx = [], 0
    for u in range(n):
        for v in range(u + 1, n):
            if mask >> idx & 1:
                edges.append((u, v))
            idx += 1
    return Graph.from_edges(n, edges)


def seeded_random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return Graph.from_edges(n, edges)
