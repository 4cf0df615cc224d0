"""Write every connected graph on n+1 vertices, one per isomorphism class, as graph6.

Each connected graph on n+1 vertices has a vertex whose removal leaves it
connected (any leaf of a spanning tree), so adding one vertex with every
non-empty neighbourhood to every connected n-vertex class reaches all
classes. Duplicates are removed by canonical form.

    python scripts/extend_connected.py 7 src/pathcover/data/graph8c.g6
    python scripts/extend_connected.py --from src/pathcover/data/graph8c.g6 graph9c.g6
"""

import argparse
import sys
import time

from pathcover.graph import (
    Graph,
    canonical_form,
    enumerate_connected,
    read_graph6_file,
    write_graph6_file,
)


def extend(graphs):
    seen = {}
    for g in graphs:
        n = g.n
        for nbrs in range(1, 1 << n):
            adj = [row | (nbrs >> v & 1) << n for v, row in enumerate(g.adj)]
            h = Graph(n + 1, tuple(adj) + (nbrs,))
            seen.setdefault(canonical_form(h), h)
    return [seen[key] for key in sorted(seen)]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("n", type=int, nargs="?", help="base order for built-in enumeration")
    parser.add_argument("--from", dest="source", help="graph6 file of connected base graphs")
    parser.add_argument("output")
    args = parser.parse_args()
    if args.source:
        base = list(read_graph6_file(args.source))
    elif args.n:
        base = list(enumerate_connected(args.n))
    else:
        parser.error("give n or --from")
    start = time.time()
    out = extend(base)
    count = write_graph6_file(args.output, out)
    print(f"{len(base)} base graphs -> {count} classes in {time.time() - start:.1f}s", file=sys.stderr)


if __name__ == "__main__":
    main()
