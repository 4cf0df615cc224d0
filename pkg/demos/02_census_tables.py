"""Tabulate path sequences over every connected graph of a given order.

A star in front of a row means some tree realises that sequence.
"""
import sys

from pathcover.census import emit_table, find_realisations, run_census

n = int(sys.argv[1]) if len(sys.argv) > 1 else 6
report = run_census(n)
print(emit_table(report, "markdown"))

# most common sequence, and who realises the rarest ones
top = max(report.records, key=lambda r: r.multiplicity)
print("most common:", top.sequence, top.multiplicity)
for r in report.records:
    if r.multiplicity == 1:
        print("unique:", r.sequence, find_realisations(r.sequence))
