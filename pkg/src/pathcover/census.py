"""Path-sequence censuses over graph populations, and sweeps for known bounds.

A source is either an int ``n`` (built-in enumeration, n <= 7), a path to a
graph6 file, or an iterable of :class:`Graph`. Sweeps are split into chunks
that may run in worker processes; results are merged and sorted so output
never depends on the worker count.
"""

from __future__ import annotations

import csv
import io
import json
import os
import warnings
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, NamedTuple, Union

import numpy as np

from .graph import (
    CANONICAL_MAX_N,
    Graph,
    canonical_form,
    encode_graph6,
    enumerate_connected,
    is_connected,
    is_tree,
    read_graph6_file,
)
from .solver import PathSequence, path_sequences

Source = Union[int, str, os.PathLike, Iterable[Graph]]

# connected classes per order (OEIS A001349); used only to flag suspicious files
KNOWN_CLASS_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080}

RULES = ("sequence", "prop32", "remark46", "cor410", "conjecture")
RULE_GROUPS = {
    "bounds": ("sequence", "prop32", "remark46"),
    "cor410": ("cor410",),
    "conjecture": ("conjecture",),
}


class CensusError(ValueError):
    pass


class DuplicateGraphError(CensusError):
    pass


@dataclass(frozen=True)
class CensusRecord:
    sequence: PathSequence
    multiplicity: int
    tree_realisable: bool


@dataclass(frozen=True)
class CensusReport:
    n: int
    records: tuple[CensusRecord, ...]
    total_graphs: int
    total_sequences: int

    def multiplicity(self, sequence: Iterable[int]) -> int:
        key = tuple(sequence)
        for rec in self.records:
            if rec.sequence == key:
                return rec.multiplicity
        return 0

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "total_graphs": self.total_graphs,
            "total_sequences": self.total_sequences,
            "records": [
                {"sequence": list(r.sequence), "multiplicity": r.multiplicity, "tree": r.tree_realisable}
                for r in self.records
            ],
        }


class Violation(NamedTuple):
    graph6: str
    rule: str
    details: str


@dataclass
class Sweep:
    """Graphs of one order with their path sequences (row ``i`` belongs to ``graphs[i]``)."""

    n: int
    graphs: list[Graph]
    sequences: np.ndarray


def load_graphs(source: Source, *, trusted: bool = False) -> list[Graph]:
    if isinstance(source, (int, np.integer)):
        return list(enumerate_connected(int(source)))
    if isinstance(source, (str, os.PathLike)):
        return _load_file(Path(source), trusted)
    return list(source)


def _load_file(path: Path, trusted: bool) -> list[Graph]:
    graphs = list(read_graph6_file(path))
    if not graphs:
        raise CensusError(f"{path}: no graphs")
    n = graphs[0].n
    if not trusted:
        if n > CANONICAL_MAX_N:
            raise CensusError(f"{path}: cannot dedupe n={n} graphs; pass trusted=True")
        seen: dict = {}
        for lineno, g in enumerate(graphs, 1):
            key = canonical_form(g)
            if key in seen:
                raise DuplicateGraphError(
                    f"{path}: line {lineno} is isomorphic to line {seen[key]}"
                )
            seen[key] = lineno
    expected = KNOWN_CLASS_COUNTS.get(n)
    if expected is not None and all(is_connected(g) for g in graphs) and len(graphs) != expected:
        warnings.warn(
            f"{path}: {len(graphs)} graphs, but there are {expected} connected classes on {n} vertices",
            stacklevel=3,
        )
    return graphs


def _chunk_sequences(adjs: np.ndarray) -> np.ndarray:
    n = adjs.shape[1]
    return path_sequences([Graph(n, tuple(int(x) for x in row)) for row in adjs])


def sweep(source: Source, *, connected_only: bool = True, trusted: bool = False,
          jobs: int = 1, chunk: int = 20000) -> Sweep:
    """Load a population and compute every path sequence."""
    graphs = load_graphs(source, trusted=trusted)
    if connected_only:
        graphs = [g for g in graphs if is_connected(g)]
    if not graphs:
        raise CensusError("source contains no graphs")
    n = graphs[0].n
    if any(g.n != n for g in graphs):
        raise CensusError("all graphs in a census must have the same order")
    if jobs <= 1 or len(graphs) <= chunk:
        seqs = path_sequences(graphs)
    else:
        adjs = np.array([g.adj for g in graphs], dtype=np.uint32)
        parts = [adjs[i:i + chunk] for i in range(0, len(adjs), chunk)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            seqs = np.concatenate(list(pool.map(_chunk_sequences, parts)))
    return Sweep(n, graphs, seqs)


def _as_sweep(source: Source | Sweep, **kwargs) -> Sweep:
    return source if isinstance(source, Sweep) else sweep(source, **kwargs)


def run_census(source: Source | Sweep, *, connected_only: bool = True, trusted: bool = False,
               jobs: int = 1) -> CensusReport:
    data = _as_sweep(source, connected_only=connected_only, trusted=trusted, jobs=jobs)
    counts: Counter = Counter()
    trees: set = set()
    for g, row in zip(data.graphs, data.sequences):
        key = tuple(int(x) for x in row)
        counts[key] += 1
        if is_tree(g):
            trees.add(key)
    records = tuple(
        CensusRecord(seq, counts[seq], seq in trees) for seq in sorted(counts)
    )
    return CensusReport(data.n, records, sum(counts.values()), len(records))


def _sequence_rules(seq: PathSequence, n: int) -> list[tuple[str, str]]:
    out = []
    if seq[0] != n:
        out.append(("sequence", f"psi_1={seq[0]} != n={n}"))
    for k in range(1, n):
        if seq[k] > seq[k - 1]:
            out.append(("sequence", f"not non-increasing at k={k + 1}: {seq[k - 1]} < {seq[k]}"))
    for k in range(1, n + 1):
        if seq[k - 1] > n - k + 1:
            out.append(("sequence", f"psi_{k}={seq[k - 1]} exceeds n-k+1={n - k + 1}"))
        if seq[k - 1] < 0:
            out.append(("sequence", f"psi_{k} is negative"))
    return out


def _prop32_rules(seq: PathSequence) -> list[tuple[str, str]]:
    out = []
    n = len(seq)
    for k in range(2, n + 1):
        pk = seq[k - 1]
        if pk <= 0:
            continue
        for m in range(1, k):
            need = pk + k // m - 1
            if seq[m - 1] < need:
                out.append(("prop32", f"m={m}, k={k}: psi_m={seq[m - 1]} < psi_k + floor(k/m) - 1 = {need}"))
    return out


def _remark46_rule(seq: PathSequence, connected: bool) -> list[tuple[str, str]]:
    n = len(seq)
    if connected:
        return []
    for k in range(2, n + 1):
        if seq[k - 1] == n - k + 1:
            return [("remark46", f"disconnected graph with psi_{k} = n-k+1 = {n - k + 1}")]
    return []


def _cor410_rule(seq: PathSequence) -> list[tuple[str, str]]:
    n = len(seq)
    for k in range(2, n):
        if seq[k - 1] == n - k + 1:
            for j in range(k + 1, n + 1):
                if seq[j - 1] != n - j + 1:
                    return [("cor410", f"psi_{k}=n-k+1 but psi_{j}={seq[j - 1]} != {n - j + 1}")]
    return []


def _conjecture_rule(seq: PathSequence) -> list[tuple[str, str]]:
    n = len(seq)
    if n >= 2 and seq[n - 2] == 2 and seq[n - 1] != 1:
        return [("conjecture", f"psi_{n - 1}=2 but psi_{n}={seq[n - 1]}")]
    return []


def check_rules(data: Sweep, rules: Iterable[str]) -> list[Violation]:
    rules = set(rules)
    unknown = rules - set(RULES)
    if unknown:
        raise CensusError(f"unknown rules: {sorted(unknown)}")
    found = []
    for g, row in zip(data.graphs, data.sequences):
        seq = tuple(int(x) for x in row)
        hits: list[tuple[str, str]] = []
        if "sequence" in rules:
            hits += _sequence_rules(seq, data.n)
        if "prop32" in rules:
            hits += _prop32_rules(seq)
        if "remark46" in rules:
            hits += _remark46_rule(seq, is_connected(g))
        if "cor410" in rules and 3 <= data.n <= 7:
            hits += _cor410_rule(seq)
        if "conjecture" in rules and is_connected(g):
            hits += _conjecture_rule(seq)
        if hits:
            g6 = encode_graph6(g)
            found.extend(Violation(g6, rule, detail) for rule, detail in hits)
    return found


def expand_rules(names: Iterable[str]) -> tuple[str, ...]:
    """Map rule-group names (``bounds``, ``cor410``, ``conjecture``) or single rules to rules."""
    out: list[str] = []
    for name in names:
        group = RULE_GROUPS.get(name, (name,) if name in RULES else None)
        if group is None:
            raise CensusError(f"unknown rule {name!r}")
        out.extend(r for r in group if r not in out)
    return tuple(out)


def verify_conjecture(source: Source | Sweep, *, trusted: bool = False, jobs: int = 1) -> list[Violation]:
    """Connected graphs with ``psi_{n-1} = 2`` but no Hamilton path."""
    data = _as_sweep(source, connected_only=False, trusted=trusted, jobs=jobs)
    loose = [encode_graph6(g) for g in data.graphs if not is_connected(g)]
    if loose:
        raise CensusError(f"conjecture sweep needs connected graphs; got {loose[0]!r} and {len(loose) - 1} more")
    return check_rules(data, ["conjecture"])


def verify_bounds(source: Source | Sweep, *, trusted: bool = False, jobs: int = 1) -> list[Violation]:
    """Sequence basics, the two-value lower bound, the connectivity remark and suffix completeness."""
    data = _as_sweep(source, connected_only=False, trusted=trusted, jobs=jobs)
    return check_rules(data, ["sequence", "prop32", "remark46", "cor410"])


def find_realisations(sequence: Iterable[int], cls: str = "any", source: Source | Sweep | None = None,
                      *, trusted: bool = False) -> list[str]:
    """graph6 strings of every class in ``source`` with this path sequence."""
    key = tuple(sequence)
    if cls not in ("any", "tree"):
        raise ValueError(f"class must be 'any' or 'tree', got {cls!r}")
    data = _as_sweep(len(key) if source is None else source, trusted=trusted)
    if data.n != len(key):
        raise CensusError(f"sequence has length {len(key)} but source graphs have {data.n} vertices")
    target = np.array(key)
    hits = np.flatnonzero((data.sequences == target).all(axis=1))
    out = []
    for i in hits:
        g = data.graphs[i]
        if cls == "tree" and not is_tree(g):
            continue
        out.append(encode_graph6(g))
    return out


@dataclass(frozen=True)
class Feasibility:
    passed: bool
    reasons: tuple[str, ...]


def sequence_feasibility(sequence: Iterable[int]) -> Feasibility:
    """Check necessary conditions only; passing does not imply realisability."""
    seq = tuple(int(x) for x in sequence)
    if not seq:
        return Feasibility(False, ("empty sequence",))
    hits = _sequence_rules(seq, len(seq)) + _prop32_rules(seq)
    return Feasibility(not hits, tuple(f"{rule}: {detail}" for rule, detail in hits))


def format_sequence(seq: Iterable[int]) -> str:
    return "(" + ",".join(str(int(x)) for x in seq) + ")"


def emit_table(report: CensusReport, fmt: str = "markdown") -> str:
    if fmt == "markdown":
        lines = ["| Sequence | Multiplicity |", "|---:|---:|"]
        for r in report.records:
            mark = "*" if r.tree_realisable else " "
            lines.append(f"| {mark} {format_sequence(r.sequence)} | {r.multiplicity} |")
        lines.append("")
        lines.append(f"{report.total_graphs} graphs, {report.total_sequences} sequences")
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["sequence", "multiplicity", "tree_realisable"])
        for r in report.records:
            writer.writerow([format_sequence(r.sequence), r.multiplicity, str(r.tree_realisable).lower()])
        return buf.getvalue()
    if fmt == "json":
        return json.dumps(report.as_dict(), indent=2) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
