"""Generate each family of counterexample drawings and summarize it."""

from oneplane import connalg
from oneplane.constructions import construct_sevenreg, construct_theorem2, construct_theorem3, construct_theorem4
from oneplane.library import base_graph

builds = {
    "thm2 k=2": construct_theorem2(2),
    "thm3 nonham38": construct_theorem3(base_graph("nonham38")),
    "thm4 k=2": construct_theorem4(2),
    "seven k=2": construct_sevenreg(2),
}
for label, c in builds.items():
    g = c.drawing.graph
    degrees = sorted(set(g.degrees()))
    print(
        f"{label:14s} {g.n:4d} vertices {g.m:5d} edges {len(c.drawing.crossings):4d} crossings "
        f"degrees {degrees} kappa {connalg.vertex_connectivity(g)} plan pairs {len(c.plan.pairs())}"
    )
