"""Exact search and the exchange heuristic on small instances."""

from oneplane import solver
from oneplane.constructions import gen_theorem2, gen_theorem3, gen_theorem4
from oneplane.library import base_graph

t2 = gen_theorem2(2)
r = solver.exact_search(t2, "min_components")
print(f"thm2 k=2: {r.status} minimum components = {r.value} after {r.nodes_explored} nodes")

t3 = gen_theorem3(base_graph("nonham38"))
r = solver.exact_search(t3, "exists_2_connected")
print(f"thm3 nonham38: 2-connected spanning plane subgraph {r.status}")

t4 = gen_theorem4(2)
print("thm4 k=2 probe:", solver.table1_probe(t4))
h = solver.exchange_heuristic(t4, seed=0)
print(f"heuristic on thm4 k=2: components history {h.history}")
