import random

import pytest

from pathcover.families import build_complete, build_cycle, build_path
from pathcover.graph import from_edge_list
from pathcover.oracle import (
    brute_force_psi_k,
    brute_force_sequence,
    longest_path_dfs,
    simple_paths,
)
from pathcover.solver import path_sequence

from conftest import random_graph


def test_triangle_vertex_cover():
    assert brute_force_psi_k(build_complete(3), 2) == 2


def test_out_of_range_k():
    with pytest.raises(ValueError):
        brute_force_psi_k(build_path(4), 5)


def test_size_cap():
    with pytest.raises(ValueError):
        brute_force_psi_k(build_path(13), 2)


def test_dfs_longest_path():
    assert longest_path_dfs(build_cycle(6)) == 6
    assert longest_path_dfs(build_path(5), frozenset({2})) == 2
    assert longest_path_dfs(from_edge_list(3, [])) == 1


def test_simple_paths_counts():
    # P_4 has 3 edges and 2 paths on 3 vertices; K_4 has 4!/2 = 12 Hamilton paths
    assert len(simple_paths(build_path(4), 2)) == 3
    assert len(simple_paths(build_path(4), 3)) == 2
    assert len(simple_paths(build_complete(4), 4)) == 12


def test_agrees_with_solver_on_random_graphs():
    rng = random.Random(8)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 9))
        assert brute_force_sequence(g) == path_sequence(g)
