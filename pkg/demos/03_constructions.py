"""Graphs built to hit prescribed path numbers, each checked by the solver."""
from pathcover import path_sequence
from pathcover.constructions import ConstructionSpec, lemma35_holds, thm34_full, twin_pair, twin_trees

# cross-linked copies of P_5 with a pendant P_3: psi_3 = 4 and psi_6 = 2
spec = ConstructionSpec(m=3, k=6, p_k=2, p_m=4)
built = thm34_full(spec)
print(built.graph.n, "vertices, middles at", built.annotated("M"))
print("psi:", built.psi, "full sequence", path_sequence(built.graph))
print("every 6-path uses >= 2 middles:", lemma35_holds(spec))

# different graphs, same sequence
g, h = twin_pair(6)
print("twins", path_sequence(g), path_sequence(h), g.num_edges(), h.num_edges())

# and two different trees
t1, t2 = twin_trees(7)
print("tree twins", sorted(t1.degrees()), sorted(t2.degrees()), path_sequence(t1))
