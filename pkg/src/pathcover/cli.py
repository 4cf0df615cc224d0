"""Command-line entry point: ``pathcover {sequence,census,verify,construct,feasible}``.

Exit codes: 0 success, 1 violations or infeasible, 2 usage/parse errors,
3 size caps exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import census, constructions
from .graph import (
    ENUMERATE_MAX_N,
    Graph,
    GraphFormatError,
    decode_graph6,
    encode_graph6,
    is_connected,
    iter_bits,
    parse_edge_list,
)
from .solver import SOLVER_MAX_N, CapExceededError, path_sequence, solver_cap

EXIT_OK, EXIT_VIOLATIONS, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read_graph(arg: str) -> Graph:
    path = Path(arg)
    if path.is_file():
        text = path.read_text()
        first = text.split("\n", 1)[0].split()
        if len(first) == 2 and all(tok.lstrip("-").isdigit() for tok in first):
            return parse_edge_list(text)
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise GraphFormatError(f"{arg}: empty file")
        return decode_graph6(lines[0])
    return decode_graph6(arg)


def _fmt(seq) -> str:
    return census.format_sequence(seq)


def cmd_sequence(args: argparse.Namespace) -> int:
    g = _read_graph(args.input)
    seq = path_sequence(g)
    print(f"{_fmt(seq)}, hamilton_path={'true' if seq[-1] == 1 else 'false'}")
    return EXIT_OK


def _source(args: argparse.Namespace):
    if args.file:
        return args.file
    if args.n is None:
        raise UsageError("give an order n or --file PATH")
    if not 2 <= args.n <= ENUMERATE_MAX_N:
        raise UsageError(
            f"built-in enumeration covers 2 <= n <= {ENUMERATE_MAX_N}; "
            f"for n={args.n} pass --file with a graph6 list of connected graphs"
        )
    return args.n


def cmd_census(args: argparse.Namespace) -> int:
    report = census.run_census(_source(args), trusted=args.trusted, jobs=args.jobs)
    text = census.emit_table(report, args.format)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if args.format != "markdown" or args.output:
        print(f"{report.total_graphs} graphs, {report.total_sequences} sequences", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    names = [r.strip() for r in args.rules.split(",") if r.strip()]
    try:
        rules = census.expand_rules(names)
    except census.CensusError as exc:
        raise UsageError(str(exc)) from None
    data = census.sweep(_source(args), connected_only=False, trusted=args.trusted, jobs=args.jobs)
    found = census.check_rules(data, rules)
    for v in found:
        print(f"{v.graph6}\t{v.rule}\t{v.details}")
    print(f"{len(found)} violations ({len(data.graphs)} graphs, rules: {','.join(rules)})")
    return EXIT_VIOLATIONS if found else EXIT_OK


def _psi_line(values: dict[int, int]) -> str:
    return " ".join(f"ψ_{k}={v}" for k, v in sorted(values.items()))


def _print_labeled(c: constructions.LabeledConstruction) -> None:
    print(encode_graph6(c.graph))
    for name, mask in c.annotations.items():
        print(f"{name}: {' '.join(str(v) for v in iter_bits(mask))}")
    print(f"checked: {_psi_line(c.psi)}" if c.checked else "unchecked (above solver cap)")


def cmd_construct(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind in ("thm34", "thm34-core"):
        if None in (args.m, args.k, args.pk):
            raise UsageError(f"{kind} needs --m, --k and --pk")
        pm = args.pm
        if pm is None:
            pm = args.pk + args.k // args.m - 1
        spec = constructions.ConstructionSpec(args.m, args.k, args.pk, pm)
        built = constructions.thm34_core(spec) if kind == "thm34-core" else constructions.thm34_full(spec)
        _print_labeled(built)
    elif kind in ("twins", "tree-twins"):
        if args.n is None:
            raise UsageError(f"{kind} needs --n")
        pair = constructions.twin_pair(args.n) if kind == "twins" else constructions.twin_trees(args.n)
        for g in pair:
            print(encode_graph6(g))
        if args.n <= SOLVER_MAX_N:
            print(f"checked: equal sequences {_fmt(path_sequence(pair[0]))}")
        else:
            print("unchecked (above solver cap)")
    elif kind == "paths":
        if args.s is None or args.m is None:
            raise UsageError("paths needs --s and --m")
        g = constructions.disjoint_paths(args.s, args.m)
        print(encode_graph6(g))
        seq = path_sequence(g)
        print(f"checked: ψ_{args.m}={seq[args.m - 1]} connected={'true' if is_connected(g) else 'false'}")
    elif kind == "anchor":
        if args.graph is None or args.k is None:
            raise UsageError("anchor needs --graph and --k")
        _print_labeled(constructions.anchor_supergraph(_read_graph(args.graph), args.k))
    elif kind == "pendants":
        if args.graph is None or args.v is None or args.t is None:
            raise UsageError("pendants needs --graph, --v and --t")
        g = constructions.attach_pendants(_read_graph(args.graph), args.v, args.t)
        print(encode_graph6(g))
        print(f"sequence: {_fmt(path_sequence(g))}")
    return EXIT_OK


def cmd_feasible(args: argparse.Namespace) -> int:
    try:
        seq = [int(tok) for tok in args.sequence.strip("() ").split(",")]
    except ValueError:
        raise UsageError(f"cannot parse sequence {args.sequence!r}") from None
    verdict = census.sequence_feasibility(seq)
    if verdict.passed:
        print(f"{_fmt(seq)}: necessary conditions pass (realisability not implied)")
        return EXIT_OK
    print(f"{_fmt(seq)}: fails")
    for reason in verdict.reasons:
        print(f"  {reason}")
    return EXIT_VIOLATIONS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pathcover", description="k-path vertex cover numbers of small graphs")
    parser.add_argument("--max-n", type=int, default=None,
                        help=f"lower the exact-solver vertex cap (at most {SOLVER_MAX_N})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sequence", help="print the path sequence of one graph")
    p.add_argument("input", help="graph6 string, or a file holding an edge list or graph6 line")
    p.set_defaults(func=cmd_sequence)

    def population(p: argparse.ArgumentParser) -> None:
        p.add_argument("n", type=int, nargs="?", help=f"order for built-in enumeration (2..{ENUMERATE_MAX_N})")
        p.add_argument("--file", help="graph6 file of connected graphs")
        p.add_argument("--trusted", action="store_true", help="skip isomorphism dedupe of file input")
        p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)

    p = sub.add_parser("census", help="tabulate path sequences with multiplicities")
    population(p)
    p.add_argument("--format", choices=["markdown", "csv", "json"], default="markdown")
    p.add_argument("--output", help="write the table here instead of standard output")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="sweep a population for rule violations")
    population(p)
    p.add_argument("--rules", default="conjecture,bounds,cor410",
                   help="comma list of: conjecture, bounds, cor410, or single rules " + ",".join(census.RULES))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="build an extremal construction")
    p.add_argument("kind", choices=["thm34", "thm34-core", "twins", "tree-twins", "paths", "anchor", "pendants"])
    for flag in ("--m", "--k", "--pk", "--pm", "--n", "--s", "--v", "--t"):
        p.add_argument(flag, type=int)
    p.add_argument("--graph", help="graph6 string or file (anchor, pendants)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("feasible", help="check necessary conditions on a candidate sequence")
    p.add_argument("sequence", help="comma separated, e.g. 5,4,3,2,1")
    p.set_defaults(func=cmd_feasible)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_n is not None and not 1 <= args.max_n <= SOLVER_MAX_N:
        parser.error(f"--max-n must be in [1, {SOLVER_MAX_N}]")
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    # set through the environment so worker processes see it too; undone on exit
    previous = os.environ.get("PATHCOVER_MAX_N")
    if args.max_n is not None:
        os.environ["PATHCOVER_MAX_N"] = str(min(solver_cap(), args.max_n))
    try:
        return _dispatch(args)
    finally:
        if previous is None:
            os.environ.pop("PATHCOVER_MAX_N", None)
        else:
            os.environ["PATHCOVER_MAX_N"] = previous


def _dispatch(args) -> int:
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, GraphFormatError, census.CensusError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except constructions.ConstructionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATIONS


if __name__ == "__main__":
    sys.exit(main())
