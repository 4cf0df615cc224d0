"""Look for connected graphs with psi_{n-1} = 2 but no Hamilton path.

Orders up to 7 come from the built-in enumerator, order 8 from the bundled
graph6 file. Pass another graph6 file (for example the 9-vertex list) as
the first argument to sweep it too.
"""
import sys
import time
from importlib.resources import files

from pathcover.census import sweep, verify_conjecture

sources = list(range(2, 8)) + [str(files("pathcover") / "data" / "graph8c.g6")]
sources += sys.argv[1:]

for src in sources:
    t = time.perf_counter()
    data = sweep(src, trusted=not isinstance(src, int), jobs=1 if isinstance(src, int) else 4)
    bad = verify_conjecture(data)
    print(f"{str(src)[-20:]:>20s}: {len(data.graphs):7d} graphs, {len(bad)} counterexamples, {time.perf_counter() - t:.1f}s")
    for v in bad[:5]:
        print("   ", v.graph6, v.details)
