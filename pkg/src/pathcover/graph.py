"""Graph representation, codecs, predicates, canonical forms and enumeration.

Graphs are small (n <= 32) and stored as one adjacency bitmask per vertex,
so vertex subsets are plain Python ints throughout the package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_VERTICES = 32
CANONICAL_MAX_N = 9
ENUMERATE_MAX_N = 7


class GraphFormatError(ValueError):
    """Raised for malformed graph6 or edge-list input."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[i]`` has bit ``j`` set iff ``ij`` is an edge.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in [1, {MAX_VERTICES}], got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {i} has neighbours outside range")
            if row >> i & 1:
                raise ValueError(f"self-loop at vertex {i}")
            for j in iter_bits(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")

    def __len__(self) -> int:
        return self.n

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(i, j)`` pairs with ``i < j``, sorted."""
        return [(i, j) for i in range(self.n) for j in iter_bits(self.adj[i]) if i < j]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def adjacency_matrix(self) -> np.ndarray:
        bits = np.arange(self.n)
        return ((np.array(self.adj, dtype=np.int64)[:, None] >> bits) & 1).astype(np.uint8)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count must be in [1, {MAX_VERTICES}], got {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((i + offset, j + offset) for i, j in g.edges())
        offset += g.n
    return from_edge_list(offset, edges)


# graph6 -------------------------------------------------------------------

def _pair_order(n: int) -> list[tuple[int, int]]:
    # graph6 column order: (0,1), (0,2), (1,2), (0,3), ...
    return [(i, j) for j in range(1, n) for i in range(j)]


def encode_graph6(g: Graph) -> str:
    bits = [g.adj[i] >> j & 1 for i, j in _pair_order(g.n)]
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(g.n + 63)]
    for start in range(0, len(bits), 6):
        value = 0
        for b in bits[start:start + 6]:
            value = value << 1 | b
        out.append(chr(value + 63))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    line = text.strip()
    if not line:
        raise GraphFormatError("empty graph6 string")
    if line.startswith(">>graph6<<"):
        raise GraphFormatError("graph6 headers are not supported")
    codes = [ord(c) for c in line]
    for pos, c in enumerate(codes):
        if not 63 <= c <= 126:
            raise GraphFormatError(f"byte {c!r} at offset {pos} is outside 63..126")
    n = codes[0] - 63
    if n == 63:
        raise GraphFormatError("long-form graph6 (n >= 63) is not supported")
    if not 1 <= n <= MAX_VERTICES:
        raise GraphFormatError(f"unsupported graph size {n}")
    pairs = _pair_order(n)
    need = (len(pairs) + 5) // 6
    payload = codes[1:]
    if len(payload) < need:
        raise GraphFormatError(f"truncated payload: expected {need} bytes, got {len(payload)}")
    if len(payload) > need:
        raise GraphFormatError(f"trailing data: expected {need} bytes, got {len(payload)}")
    adj = [0] * n
    for idx, (i, j) in enumerate(pairs):
        byte = payload[idx // 6] - 63
        if byte >> (5 - idx % 6) & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def read_graph6_file(path: str | Path) -> Iterator[Graph]:
    with open(path, encoding="ascii") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                yield decode_graph6(line)
            except GraphFormatError as exc:
                raise GraphFormatError(f"{path}:{lineno}: {exc}") from None


def write_graph6_file(path: str | Path, graphs: Iterable[Graph]) -> int:
    count = 0
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        for g in graphs:
            fh.write(encode_graph6(g) + "\n")
            count += 1
    return count


# edge-list text ---------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-indexed)."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise GraphFormatError("edge list must start with a line 'n m'")
    try:
        n, m = int(lines[0][0]), int(lines[0][1])
        edges = [(int(a), int(b)) for a, b in lines[1:]]
    except ValueError as exc:
        raise GraphFormatError(f"bad edge list: {exc}") from None
    if len(edges) != m:
        raise GraphFormatError(f"header promises {m} edges, found {len(edges)}")
    try:
        return from_edge_list(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


# predicates and deletions ----------------------------------------------------

def component_mask(g: Graph, start: int = 0, within: int | None = None) -> int:
    """Vertices reachable from ``start`` inside the vertex set ``within``."""
    allowed = g.full_mask if within is None else within
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def components(g: Graph) -> list[int]:
    rest = g.full_mask
    comps = []
    while rest:
        start = (rest & -rest).bit_length() - 1
        comp = component_mask(g, start, rest)
        comps.append(comp)
        rest &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    return component_mask(g) == g.full_mask


def is_tree(g: Graph) -> bool:
    return g.num_edges() == g.n - 1 and is_connected(g)


def induced_subgraph(g: Graph, keep: int) -> Graph:
    """Subgraph induced by the vertex mask ``keep``, renumbered in order."""
    kept = list(iter_bits(keep))
    index = {v: i for i, v in enumerate(kept)}
    adj = []
    for v in kept:
        row = 0
        for u in iter_bits(g.adj[v] & keep):
            row |= 1 << index[u]
        adj.append(row)
    return Graph(len(kept), tuple(adj))


def delete_vertices(g: Graph, s: int) -> Graph:
    if s & ~g.full_mask:
        raise ValueError("vertex set contains vertices outside the graph")
    if s == g.full_mask:
        raise ValueError("cannot delete every vertex")
    return induced_subgraph(g, g.full_mask & ~s)


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm must be a permutation of range(n)")
    return from_edge_list(g.n, [(perm[i], perm[j]) for i, j in g.edges()])


# canonical forms -------------------------------------------------------------

@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Relabeling-invariant code; equal codes iff isomorphic graphs.

    ``code`` reads the upper triangle in graph6 pair order, first pair as the
    most significant bit, so integer order is lexicographic string order.
    """

    n: int
    code: int

    @property
    def bits(self) -> str:
        width = self.n * (self.n - 1) // 2
        return format(self.code, f"0{width}b") if width else ""


def _pair_weights(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    pairs = _pair_order(n)
    width = len(pairs)
    rows = np.array([i for i, _ in pairs], dtype=np.intp)
    cols = np.array([j for _, j in pairs], dtype=np.intp)
    weights = np.array([1 << (width - 1 - p) for p in range(width)], dtype=np.int64)
    return rows, cols, weights


def refine_colours(g: Graph) -> list[int]:
    """Stable colour refinement with isomorphism-invariant colour names."""
    colours = [0] * g.n
    classes = 1
    while True:
        sig = [
            (colours[v], tuple(sorted(colours[u] for u in iter_bits(g.adj[v]))))
            for v in range(g.n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sig)))}
        colours = [rank[s] for s in sig]
        if len(rank) == classes:
            return colours
        classes = len(rank)


def _cell_respecting_orders(colours: list[int]) -> np.ndarray:
    """All vertex orders that list colour classes in ascending colour."""
    cells = [[v for v, c in enumerate(colours) if c == col] for col in sorted(set(colours))]
    blocks = [np.array(list(itertools.permutations(cell)), dtype=np.intp) for cell in cells]
    orders = blocks[0]
    for block in blocks[1:]:
        orders = np.hstack([
            np.repeat(orders, len(block), axis=0),
            np.tile(block, (len(orders), 1)),
        ])
    return orders


def canonical_form(g: Graph) -> CanonicalForm:
    """Minimum adjacency code over the relabelings allowed by colour refinement.

    Refinement fixes an isomorphism-invariant ordered partition of the
    vertices; only orders placing the cells in sequence are searched, which
    keeps the search tiny except on very regular graphs.
    """
    if g.n > CANONICAL_MAX_N:
        raise ValueError(f"canonical form supports n <= {CANONICAL_MAX_N}, got {g.n}")
    if g.n == 1:
        return CanonicalForm(1, 0)
    rows, cols, weights = _pair_weights(g.n)
    a = g.adjacency_matrix()
    orders = _cell_respecting_orders(refine_colours(g))
    best = None
    for start in range(0, len(orders), 40320):
        chunk = orders[start:start + 40320]
        codes = a[chunk[:, rows], chunk[:, cols]].astype(np.int64) @ weights
        low = int(codes.min())
        best = low if best is None else min(best, low)
    return CanonicalForm(g.n, best)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


# enumeration -----------------------------------------------------------------

def _graph_from_code(n: int, code: int) -> Graph:
    pairs = _pair_order(n)
    width = len(pairs)
    adj = [0] * n
    for p, (i, j) in enumerate(pairs):
        if code >> (width - 1 - p) & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def enumerate_connected(n: int) -> Iterator[Graph]:
    """One graph per isomorphism class of connected graphs on ``n`` vertices.

    Walks all labeled graphs in ascending code order. The first unseen code
    is the minimum of its orbit under relabeling; the whole orbit is then
    marked seen, so each class is emitted once, as its minimal labeling.
    """
    if not 2 <= n <= ENUMERATE_MAX_N:
        raise ValueError(
            f"built-in enumeration covers 2 <= n <= {ENUMERATE_MAX_N}; "
            "supply a graph6 file for larger n"
        )
    pairs = _pair_order(n)
    width = len(pairs)
    index = {pair: p for p, pair in enumerate(pairs)}
    perms = list(itertools.permutations(range(n)))
    # moved[q, p]: weight of pair p after applying permutation q
    moved = np.empty((len(perms), width), dtype=np.int64)
    for q, perm in enumerate(perms):
        for p, (i, j) in enumerate(pairs):
            a, b = sorted((perm[i], perm[j]))
            moved[q, p] = 1 << (width - 1 - index[(a, b)])
    unseen = np.ones(1 << width, dtype=bool)
    code = 0
    total = 1 << width
    while code < total:
        code += int(np.argmax(unseen[code:]))
        if not unseen[code]:
            break
        set_bits = [p for p in range(width) if code >> (width - 1 - p) & 1]
        unseen[moved[:, set_bits].sum(axis=1)] = False
        g = _graph_from_code(n, code)
        if is_connected(g):
            yield g
        code += 1
