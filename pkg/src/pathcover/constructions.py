"""Graph constructions with solver-checked path-number postconditions.

Each builder returns the graph together with what was verified. Graphs
larger than the exact solver cap are still built, but come back with
``checked=False``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import (
    MAX_VERTICES,
    Graph,
    canonical_form,
    disjoint_union,
    enumerate_connected,
    from_edge_list,
    is_connected,
    is_tree,
    iter_bits,
    mask_of,
)
from .families import build_cycle, build_path
from .solver import longest_path_table, path_sequence, solver_cap


class ConstructionError(RuntimeError):
    """A builder's postcondition failed under the exact solver."""


@dataclass(frozen=True)
class ConstructionSpec:
    """Targets ``psi_k = p_k`` and ``psi_m = p_m`` for the two-value builder."""

    m: int
    k: int
    p_k: int
    p_m: int

    def __post_init__(self) -> None:
        if not 1 <= self.m < self.k:
            raise ValueError(f"need 1 <= m < k, got m={self.m}, k={self.k}")
        if self.p_k < 1:
            raise ValueError(f"p_k must be positive, got {self.p_k}")
        if self.p_m < self.p_k + self.a - 1:
            raise ValueError(
                f"p_m={self.p_m} is below p_k + floor(k/m) - 1 = {self.p_k + self.a - 1}"
            )

    @property
    def a(self) -> int:
        return self.k // self.m

    @property
    def core_paths(self) -> int:
        return self.p_k + self.a - 1

    @property
    def extra_paths(self) -> int:
        return self.p_m - self.core_paths

    @property
    def core_size(self) -> int:
        return self.core_paths * (2 * self.m - 1)

    @property
    def full_size(self) -> int:
        return self.core_size + self.extra_paths * self.m


@dataclass
class LabeledConstruction:
    graph: Graph
    annotations: dict[str, int] = field(default_factory=dict)
    checked: bool = False
    psi: dict[int, int] = field(default_factory=dict)

    def annotated(self, name: str) -> list[int]:
        return list(iter_bits(self.annotations[name]))


def _solvable(n: int) -> bool:
    return n <= solver_cap()


def _check_targets(g: Graph, targets: dict[int, int], what: str) -> dict[int, int]:
    seq = path_sequence(g)
    got = {k: seq[k - 1] for k in targets}
    if got != targets:
        raise ConstructionError(f"{what}: expected {targets}, solver gave {got}")
    return got


def attach_pendants(g: Graph, v: int, t: int) -> Graph:
    """Add ``t`` new leaves, all adjacent to ``v``."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} outside [0, {g.n})")
    if t < 0:
        raise ValueError("pendant count must be non-negative")
    if g.n + t > MAX_VERTICES:
        raise ValueError(f"result would have {g.n + t} > {MAX_VERTICES} vertices")
    return from_edge_list(g.n + t, g.edges() + [(v, g.n + i) for i in range(t)])


def k4_minus_edge() -> Graph:
    """``K_4 - e`` with the missing edge 2-3, so vertices 0 and 1 have degree 3."""
    return from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def twin_pair(n: int) -> tuple[Graph, Graph]:
    """Non-isomorphic connected graphs on ``n`` vertices with equal path sequences."""
    if n < 4:
        raise ValueError("twin pairs exist only for n >= 4")
    g = attach_pendants(build_cycle(4), 0, n - 4)
    h = attach_pendants(k4_minus_edge(), 0, n - 4)
    # degree multisets differ (C_4 has 4 edges, K_4 - e has 5), so g and h are not isomorphic
    if sorted(g.degrees()) == sorted(h.degrees()):
        raise ConstructionError("twin pair unexpectedly shares a degree sequence")
    if _solvable(n) and path_sequence(g) != path_sequence(h):
        raise ConstructionError(f"twin pair sequences differ for n={n}")
    return g, h


def _core_graph(spec: ConstructionSpec) -> tuple[Graph, int]:
    span = 2 * spec.m - 1
    middles = [i * span + spec.m - 1 for i in range(spec.core_paths)]
    edges = []
    for i in range(spec.core_paths):
        base = i * span
        edges.extend((base + x, base + x + 1) for x in range(span - 1))
        for j, mid in enumerate(middles):
            if j != i:
                edges.extend((base + x, mid) for x in range(span))
    return from_edge_list(spec.core_size, edges), mask_of(middles)


def thm34_core(spec: ConstructionSpec) -> LabeledConstruction:
    """Cross-linked copies of ``P_{2m-1}`` realising ``psi_m = p_k + a - 1`` and ``psi_k = p_k``.

    Path ``i`` occupies vertices ``i*(2m-1) .. i*(2m-1) + 2m-2`` with its
    middle vertex at offset ``m-1``. Every vertex of a path is joined to
    the middle vertex of every other path.
    """
    if spec.core_size > MAX_VERTICES:
        raise ValueError(f"core graph would have {spec.core_size} > {MAX_VERTICES} vertices")
    g, middles = _core_graph(spec)
    out = LabeledConstruction(g, {"M": middles})
    if _solvable(g.n):
        out.psi = _check_targets(g, {spec.m: spec.core_paths, spec.k: spec.p_k}, "core graph")
        out.checked = True
    return out


def thm34_full(spec: ConstructionSpec) -> LabeledConstruction:
    """Core graph plus ``p_m - (p_k + a - 1)`` copies of ``P_m`` hung from the first middle vertex."""
    size = spec.full_size
    if size > MAX_VERTICES:
        raise ValueError(f"graph would have {size} > {MAX_VERTICES} vertices")
    core, middles = _core_graph(spec)
    first_middle = spec.m - 1
    edges = core.edges()
    starts = []
    for j in range(spec.extra_paths):
        base = spec.core_size + j * spec.m
        starts.append(base)
        edges.extend((base + x, base + x + 1) for x in range(spec.m - 1))
        edges.append((base, first_middle))
    g = from_edge_list(size, edges)
    out = LabeledConstruction(g, {"M": middles, "Q_starts": mask_of(starts)})
    if not is_connected(g):
        raise ConstructionError("construction is not connected")
    if _solvable(size):
        out.psi = _check_targets(g, {spec.m: spec.p_m, spec.k: spec.p_k}, "full graph")
        out.checked = True
    return out


def min_k_path_hits(g: Graph, k: int, marked: int, threshold: int) -> tuple[int, ...] | None:
    """Search for a simple path on ``k`` vertices meeting ``marked`` fewer than ``threshold`` times.

    Exhaustive DFS; branches are cut once they have ``threshold`` marked
    vertices. Returns such a path, or ``None`` if every ``k``-path meets
    ``marked`` at least ``threshold`` times.
    """
    nbrs = [list(iter_bits(row)) for row in g.adj]

    def walk(path: list[int], used: int, hits: int) -> tuple[int, ...] | None:
        if len(path) == k:
            return tuple(path)
        for u in nbrs[path[-1]]:
            if used >> u & 1:
                continue
            h = hits + (marked >> u & 1)
            if h >= threshold:
                continue
            path.append(u)
            found = walk(path, used | 1 << u, h)
            path.pop()
            if found:
                return found
        return None

    for v in range(g.n):
        h = marked >> v & 1
        if h < threshold:
            found = walk([v], 1 << v, h)
            if found:
                return found
    return None


def lemma35_holds(spec: ConstructionSpec) -> bool:
    """Every path on ``k`` vertices in the core graph uses at least ``a`` middle vertices."""
    g, middles = _core_graph(spec)
    return min_k_path_hits(g, spec.k, middles, spec.a) is None


def disjoint_paths(s: int, m: int) -> Graph:
    if s < 1 or m < 1:
        raise ValueError("need s >= 1 and m >= 1")
    if s * m > MAX_VERTICES:
        raise ValueError(f"graph would have {s * m} > {MAX_VERTICES} vertices")
    g = disjoint_union(*[build_path(m)] * s)
    if _solvable(g.n):
        seq = path_sequence(g)
        if seq[m - 1] != s or any(seq[k - 1] for k in range(m + 1, g.n + 1)):
            raise ConstructionError(f"{s} copies of P_{m}: unexpected sequence {seq}")
    return g


def anchor_supergraph(h: Graph, k: int) -> LabeledConstruction:
    """Hang a path on ``k`` vertices from every vertex of ``h``.

    The original vertices keep labels ``0..|h|-1`` (annotation ``W``); path
    vertices for original ``v`` follow in a block. ``W`` is then a minimum
    k-PVC and ``G[W]`` is ``h``.
    """
    if k < 1:
        raise ValueError("k must be positive")
    size = h.n * k
    if size > MAX_VERTICES:
        raise ValueError(f"graph would have {size} > {MAX_VERTICES} vertices")
    edges = h.edges()
    for v in range(h.n):
        chain = [v] + [h.n + v * (k - 1) + x for x in range(k - 1)]
        edges.extend(zip(chain, chain[1:]))
    g = from_edge_list(size, edges)
    w = h.full_mask
    out = LabeledConstruction(g, {"W": w})
    if _solvable(size):
        longest = longest_path_table(g)
        out.psi = _check_targets(g, {k: h.n}, "anchor supergraph")
        if int(longest[g.full_mask & ~w]) >= k:
            raise ConstructionError("original vertex set is not a k-path vertex cover")
        out.checked = True
    return out


def tree_code(g: Graph) -> str:
    """Canonical string of a tree (centre-rooted AHU encoding); equal iff isomorphic."""
    if not is_tree(g):
        raise ValueError("tree_code needs a tree")
    if g.n == 1:
        return "()"
    degree = g.degrees()
    layer = [v for v in range(g.n) if degree[v] == 1]
    remaining = g.n
    removed = 0
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for leaf in layer:
            removed |= 1 << leaf
            for u in iter_bits(g.adj[leaf] & ~removed):
                degree[u] -= 1
                if degree[u] == 1:
                    nxt.append(u)
        layer = nxt
    centres = [v for v in range(g.n) if not removed >> v & 1]

    def encode(v: int, parent: int) -> str:
        kids = sorted(encode(u, v) for u in iter_bits(g.adj[v]) if u != parent)
        return "(" + "".join(kids) + ")"

    return min(encode(c, -1) for c in centres)


def _seven_vertex_tree_twins() -> tuple[Graph, Graph]:
    target = (7, 2, 2, 1, 1, 0, 0)
    trees = [g for g in enumerate_connected(7) if is_tree(g) and path_sequence(g) == target]
    if len(trees) < 2:
        raise ConstructionError(f"found {len(trees)} trees with sequence {target}, need 2")
    trees.sort(key=canonical_form)
    return trees[0], trees[1]


def twin_trees(n: int) -> tuple[Graph, Graph]:
    """Non-isomorphic trees on ``n`` vertices sharing the sequence ``(n,2,2,1,1,0,...,0)``.

    The base pair is the two smallest (by canonical form) 7-vertex trees with
    sequence ``(7,2,2,1,1,0,0)``; larger pairs attach ``n-7`` leaves to a
    vertex of each, chosen by search.
    """
    if n < 7:
        raise ValueError("tree twins exist only for n >= 7")
    t1, t2 = _seven_vertex_tree_twins()
    if n == 7:
        return t1, t2
    if n > MAX_VERTICES:
        raise ValueError(f"n must be at most {MAX_VERTICES}")
    probe = n if _solvable(n) else 8
    target = (probe, 2, 2, 1, 1) + (0,) * (probe - 5)
    for w1 in range(7):
        a = attach_pendants(t1, w1, probe - 7)
        if path_sequence(a) != target:
            continue
        for w2 in range(7):
            b = attach_pendants(t2, w2, probe - 7)
            if path_sequence(b) == target and tree_code(a) != tree_code(b):
                return attach_pendants(t1, w1, n - 7), attach_pendants(t2, w2, n - 7)
    raise ConstructionError(f"no attachment vertices give tree twins for n={n}")
