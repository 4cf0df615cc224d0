import random
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from pathcover.census import sweep
from pathcover.graph import Graph, enumerate_connected, from_edge_list

settings.register_profile("pathcover", deadline=None, max_examples=100)
settings.load_profile("pathcover")

DATA_DIR = Path(__file__).resolve().parents[1] / "src" / "pathcover" / "data"
GRAPH8_FILE = DATA_DIR / "graph8c.g6"


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    if p is None:
        p = rng.uniform(0.15, 0.85)
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [pair for pair, keep in zip(pairs, chosen) if keep])


@pytest.fixture(scope="session")
def connected_by_order():
    out = {1: [Graph(1, (0,))]}
    for n in range(2, 8):
        out[n] = list(enumerate_connected(n))
    return out


@pytest.fixture(scope="session")
def census_sweeps():
    return {n: sweep(n) for n in (5, 6, 7)}
