"""Connectivity, Hamiltonicity, 2-factors and Tait colourings on the shipped cubic graphs."""

from oneplane import connalg
from oneplane.library import base_graph

for name in ("prism3", "cube", "nonham38", "petersen"):
    g = base_graph(name)
    rep = connalg.connectivity(g)
    ham = connalg.hamiltonian_cycle(g)
    factors = list(connalg.two_factors(g))
    print(f"{name:9s} n={g.n:3d} kappa={rep.kappa} kappa'={rep.kappa_edge} hamiltonian={ham.status:5s} 2-factors={len(factors)}")

g = base_graph("nonham38")
colouring = connalg.tait_coloring(g, seed=3)
print("Tait colouring of nonham38 is proper:", colouring.is_proper(g))
part = connalg.p2_partition(g)
print(f"nonham38 splits into {len(part.paths)} two-edge paths, leftover {part.leftover}")
