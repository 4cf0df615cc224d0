"""Brute-force path numbers, kept free of any code shared with the DP solver.

Used only for cross-checking: subsets are tried in order of increasing size
and each candidate is tested by depth-first search over simple paths.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph

ORACLE_MAX_N = 12


def _neighbour_lists(g: Graph) -> list[list[int]]:
    return [[u for u in range(g.n) if g.adj[v] >> u & 1] for v in range(g.n)]


def longest_path_dfs(g: Graph, removed: frozenset[int] = frozenset(), stop_at: int | None = None) -> int:
    """Order of a longest simple path in ``G - removed``.

    With ``stop_at`` the search returns as soon as a path of that order is seen.
    """
    nbrs = _neighbour_lists(g)
    alive = [v for v in range(g.n) if v not in removed]
    best = 0
    on_path = [False] * g.n

    def extend(v: int, length: int) -> bool:
        nonlocal best
        if length > best:
            best = length
            if stop_at is not None and best >= stop_at:
                return True
        for u in nbrs[v]:
            if not on_path[u] and u not in removed:
                on_path[u] = True
                done = extend(u, length + 1)
                on_path[u] = False
                if done:
                    return True
        return False

    for v in alive:
        on_path[v] = True
        done = extend(v, 1)
        on_path[v] = False
        if done:
            break
    return best


def brute_force_psi_k(g: Graph, k: int) -> int:
    if g.n > ORACLE_MAX_N:
        raise ValueError(f"oracle supports n <= {ORACLE_MAX_N}, got {g.n}")
    if not 1 <= k <= g.n:
        raise ValueError(f"k must be in [1, {g.n}], got {k}")
    for size in range(g.n + 1):
        for removed in combinations(range(g.n), size):
            if longest_path_dfs(g, frozenset(removed), stop_at=k) < k:
                return size
    raise AssertionError("deleting every vertex always leaves no path")


def brute_force_sequence(g: Graph) -> tuple[int, ...]:
    return tuple(brute_force_psi_k(g, k) for k in range(1, g.n + 1))


def simple_paths(g: Graph, k: int) -> list[tuple[int, ...]]:
    """Every simple path on ``k`` vertices, each listed once (both directions folded)."""
    nbrs = _neighbour_lists(g)
    found = []

    def walk(path: list[int], used: int) -> None:
        if len(path) == k:
            if path[0] < path[-1] or k == 1:
                found.append(tuple(path))
            return
        for u in nbrs[path[-1]]:
            if not used >> u & 1:
                path.append(u)
                walk(path, used | 1 << u)
                path.pop()

    for v in range(g.n):
        walk([v], 1 << v)
    return found
