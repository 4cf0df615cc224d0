"""Path sequences of a few familiar graphs.

psi_k is the fewest vertices you must delete so that no path on k
vertices survives. The full vector (psi_1, ..., psi_n) is the path sequence.
"""
from pathcover import decode_graph6, has_hamilton_path, minimum_k_pvcs, path_sequence
from pathcover.families import build_complete, build_cycle, build_path, psi_cycle
from pathcover.solver import vertices_of

# psi_1 is always n, and psi_n is 1 exactly when there is a Hamilton path
for name, g in [("P_6", build_path(6)), ("C_6", build_cycle(6)), ("K_6", build_complete(6))]:
    print(f"{name:4s} {path_sequence(g)}  hamilton={has_hamilton_path(g)}")

# closed forms agree with the solver
print("C_9, k=4:", psi_cycle(9, 4), "vs", path_sequence(build_cycle(9))[3])

# the Petersen graph in graph6
petersen = decode_graph6("IheA@GUAo")
print("Petersen", path_sequence(petersen))

# every minimum 3-path cover of C_6 (vertex sets whose removal leaves only edges and singletons)
for mask in minimum_k_pvcs(build_cycle(6), 3):
    print("  cover", vertices_of(mask))
