"""Closed-form path numbers for paths, cycles, complete and complete bipartite graphs."""

from __future__ import annotations

from .graph import Graph, from_edge_list


def _check(n: int, k: int) -> None:
    if not 1 <= k <= n:
        raise ValueError(f"k must be in [1, {n}], got {k}")


def psi_path(n: int, k: int) -> int:
    _check(n, k)
    return n // k


def psi_cycle(n: int, k: int) -> int:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    _check(n, k)
    return -(-n // k)


def psi_complete(n: int, k: int) -> int:
    _check(n, k)
    return n - k + 1


def psi_complete_bipartite(a: int, b: int, k: int) -> int:
    if a < 1 or b < 1:
        raise ValueError("both sides of K_{a,b} need at least one vertex")
    _check(a + b, k)
    small = min(a, b)
    if k == 1:
        return a + b
    if k <= 2 * small + 1:
        return small - k // 2 + 1
    return 0


def build_path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def build_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def build_complete(n: int) -> Graph:
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def build_complete_bipartite(a: int, b: int) -> Graph:
    """``K_{a,b}`` with the a-side on vertices ``0..a-1``."""
    if a < 1 or b < 1:
        raise ValueError("both sides of K_{a,b} need at least one vertex")
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])
