"""Exact k-path vertex cover numbers via a subset DP over simple paths.

One table pass per graph yields every path number at once: ``reach[mask]``
records which vertices end a simple path spanning exactly ``mask``, and
``f[T]`` is the order of a longest path inside ``G[T]``. Then

    psi_k(G) = n - max{|T| : f[T] < k}.
"""

from __future__ import annotations

import os

import numpy as np
from numba import njit

from .graph import Graph, iter_bits

SOLVER_MAX_N = 24
ENUMERATION_MAX_N = 20

PathSequence = tuple[int, ...]


class CapExceededError(ValueError):
    """Input is larger than the configured exact-solver cap."""


def solver_cap() -> int:
    """Current vertex cap; ``PATHCOVER_MAX_N`` may lower but never raise it."""
    raw = os.environ.get("PATHCOVER_MAX_N")
    if raw is None:
        return SOLVER_MAX_N
    try:
        value = int(raw)
    except ValueError:
        return SOLVER_MAX_N
    return max(1, min(value, SOLVER_MAX_N))


def _check_cap(n: int, cap: int | None = None) -> None:
    limit = solver_cap() if cap is None else min(cap, solver_cap())
    if n > limit:
        raise CapExceededError(f"graph has {n} vertices; exact solver cap is {limit}")


@njit(cache=True)
def _tables(adj, n):
    size = 1 << n
    reach = np.zeros(size, dtype=np.uint32)
    longest = np.zeros(size, dtype=np.uint8)
    for mask in range(1, size):
        ends = 0
        best = 0
        count = 0
        for v in range(n):
            bit = 1 << v
            if mask & bit:
                count += 1
                rest = mask ^ bit
                if rest == 0 or reach[rest] & adj[v]:
                    ends |= bit
                if longest[rest] > best:
                    best = longest[rest]
        reach[mask] = ends
        longest[mask] = count if ends else best
    return reach, longest


@njit(cache=True)
def _popcounts(n):
    size = 1 << n
    pc = np.zeros(size, dtype=np.uint8)
    for mask in range(1, size):
        pc[mask] = pc[mask >> 1] + (mask & 1)
    return pc


@njit(cache=True)
def _sequence_from_longest(longest, pc, n):
    # widest[L]: largest |T| whose longest path has order exactly L
    widest = np.full(n + 1, -1, dtype=np.int64)
    for mask in range(longest.shape[0]):
        L = longest[mask]
        if pc[mask] > widest[L]:
            widest[L] = pc[mask]
    seq = np.empty(n, dtype=np.int64)
    running = -1
    for k in range(1, n + 1):
        if widest[k - 1] > running:
            running = widest[k - 1]
        seq[k - 1] = n - running
    return seq


@njit(cache=True)
def _batch_sequences(adjs, n):
    pc = _popcounts(n)
    out = np.empty((adjs.shape[0], n), dtype=np.int64)
    for b in range(adjs.shape[0]):
        _, longest = _tables(adjs[b], n)
        out[b] = _sequence_from_longest(longest, pc, n)
    return out


def _adj_array(g: Graph) -> np.ndarray:
    return np.array(g.adj, dtype=np.uint32)


def path_witness_table(g: Graph) -> np.ndarray:
    """``reach[mask]``: bitmask of endpoints of simple paths spanning ``mask``."""
    _check_cap(g.n)
    reach, _ = _tables(_adj_array(g), g.n)
    return reach


def longest_path_table(g: Graph) -> np.ndarray:
    """``f[T]``: order of a longest simple path in ``G[T]``; monotone in ``T``."""
    _check_cap(g.n)
    _, longest = _tables(_adj_array(g), g.n)
    return longest


def path_sequence(g: Graph) -> PathSequence:
    _check_cap(g.n)
    _, longest = _tables(_adj_array(g), g.n)
    seq = _sequence_from_longest(longest, _popcounts(g.n), g.n)
    return tuple(int(x) for x in seq)


def path_sequences(graphs: list[Graph]) -> np.ndarray:
    """Path sequences of many graphs of equal order, as an ``(B, n)`` array."""
    if not graphs:
        return np.zeros((0, 0), dtype=np.int64)
    n = graphs[0].n
    if any(g.n != n for g in graphs):
        raise ValueError("batched graphs must share a vertex count")
    _check_cap(n)
    adjs = np.array([g.adj for g in graphs], dtype=np.uint32).reshape(len(graphs), n)
    return _batch_sequences(adjs, n)


def _check_k(g: Graph, k: int) -> None:
    if not 1 <= k <= g.n:
        raise ValueError(f"k must be in [1, {g.n}], got {k}")


def psi_k(g: Graph, k: int) -> int:
    _check_k(g, k)
    return path_sequence(g)[k - 1]


def has_hamilton_path(g: Graph) -> bool:
    return bool(path_witness_table(g)[g.full_mask])


def minimum_k_pvcs(g: Graph, k: int) -> list[int]:
    """Every minimum k-path vertex cover, as vertex masks in ascending order."""
    if not 1 < k <= g.n:
        raise ValueError(f"k must be in (1, {g.n}], got {k}")
    _check_cap(g.n, ENUMERATION_MAX_N)
    longest = longest_path_table(g)
    return _covers_from_table(longest, g.n, k)


def _covers_from_table(longest: np.ndarray, n: int, k: int) -> list[int]:
    masks = np.arange(1 << n, dtype=np.int64)
    pc = _popcounts(n)
    full = (1 << n) - 1
    is_cover = longest[full ^ masks] < k
    size = int(pc[is_cover].min())
    hits = masks[is_cover & (pc == size)]
    return [int(m) for m in hits]


def cover_union(g: Graph, k: int) -> int:
    """Vertices lying in at least one minimum k-PVC."""
    out = 0
    for mask in minimum_k_pvcs(g, k):
        out |= mask
    return out


def is_k_pvc(g: Graph, s: int, k: int) -> bool:
    """True iff deleting ``s`` leaves no path on ``k`` vertices."""
    longest = longest_path_table(g)
    return int(longest[g.full_mask & ~s]) < k


def longest_path_order(g: Graph) -> int:
    return int(longest_path_table(g)[g.full_mask])


def vertices_of(mask: int) -> list[int]:
    return list(iter_bits(mask))
