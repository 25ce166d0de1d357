"""Regenerate the frozen base-graph data files.

Development helper only (needs networkx).  Writes ``nonham38.1pg``,
``nonham46.1pg`` and ``figure4.1pg`` into ``src/oneplane/data``.

nonham46 is Tutte's graph.  nonham38 is built from the 10-vertex cubic
polyhedron below by replacing vertices 0 and 1 with Tutte fragments.  A
Hamiltonian cycle through a fragment must use the fragment's edge towards
the old centre; those edges are glued onto base edges 0-3 and 1-8, and no
Hamiltonian cycle of the base contains both.  The test suite rechecks the
result (cubic, 3-connected, plane rotation, no Hamiltonian cycle).
"""

from __future__ import annotations

from pathlib import Path

import networkx as nx

from oneplane.core import OnePlaneDrawing, RotationMultigraph, validate_drawing
from oneplane.fileio import save
from oneplane.library import figure4_drawing

DATA = Path(__file__).resolve().parent.parent / "src" / "oneplane" / "data"

BASE10 = [(0, 2), (0, 3), (0, 7), (1, 5), (1, 7), (1, 8), (2, 5), (2, 6), (3, 6), (3, 9),
          (4, 5), (4, 6), (4, 8), (7, 9), (8, 9)]
# vertices of one Tutte fragment inside networkx's tutte_graph, its edge to the
# centre vertex (the forced edge) and the two other boundary edges
FRAGMENT = [1, 4, 5, 6, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33]
TOP, OTHERS = 1, (6, 23)


def replace_vertex(g: nx.Graph, x, forced, tag: str) -> nx.Graph:
    tutte = nx.tutte_graph()
    frag = tutte.subgraph(FRAGMENT)
    rest = [w for w in g[x] if w != forced]
    h = g.copy()
    h.remove_node(x)
    h.add_edges_from(((tag, a), (tag, b)) for a, b in frag.edges())
    h.add_edge((tag, TOP), forced)
    h.add_edge((tag, OTHERS[0]), rest[0])
    h.add_edge((tag, OTHERS[1]), rest[1])
    return h


def nonham38() -> nx.Graph:
    g = nx.Graph(BASE10)
    h = replace_vertex(g, 0, 3, "X")
    h = replace_vertex(h, 1, 8, "Y")
    order = sorted(h.nodes, key=lambda v: (isinstance(v, tuple), repr(v)))
    return nx.relabel_nodes(h, {v: i for i, v in enumerate(order)})


def with_rotation(g: nx.Graph) -> OnePlaneDrawing:
    ok, emb = nx.check_planarity(g)
    assert ok
    rot = [list(emb.neighbors_cw_order(v)) for v in range(g.number_of_nodes())]
    d = OnePlaneDrawing(RotationMultigraph.from_neighbor_rotation(rot))
    assert validate_drawing(d).ok
    return d


def main() -> None:
    DATA.mkdir(parents=True, exist_ok=True)
    save(with_rotation(nonham38()), DATA / "nonham38.1pg",
         "38-vertex 3-connected cubic plane graph without a Hamiltonian cycle")
    tutte = nx.convert_node_labels_to_integers(nx.tutte_graph(), ordering="sorted")
    save(with_rotation(tutte), DATA / "nonham46.1pg", "Tutte's 46-vertex non-hamiltonian cubic polyhedron")
    save(figure4_drawing(), DATA / "figure4.1pg", "straight-line 1-plane drawing of the crossed, inflated 4-prism (24 vertices, cubic)")


if __name__ == "__main__":
    main()
