"""The k-gadgets and their apex closures."""

from oneplane import connalg
from oneplane.gadgets import GADGET_SIZES, gadget

for k in GADGET_SIZES:
    g = gadget(k)
    closure = g.apex_closure()
    d = g.drawing
    print(
        f"gadget({k}): {d.graph.n} vertices, {d.graph.m} edges, {len(d.crossings)} crossings; "
        f"apex closure {k}-regular={closure.is_regular(k)} kappa={connalg.vertex_connectivity(closure)} "
        f"contract problems={g.check()}"
    )
