from __future__ import annotations

import random
from itertools import combinations

import networkx as nx
import numpy as np
import pytest
from hypothesis import strategies as st

from oneplane.core import OnePlaneDrawing, RotationMultigraph
from oneplane.geometry import random_drawing

ACCEPTANCE_LINES: dict[tuple[int, str], str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])


def to_nx(graph, kept=None) -> nx.Graph:
    """Simple networkx view (parallel edges collapse) on all vertices."""
    if isinstance(graph, OnePlaneDrawing):
        graph = graph.graph
    n, edges = (graph.n, graph.edges) if isinstance(graph, RotationMultigraph) else graph
    G = nx.Graph()
    G.add_nodes_from(range(n))
    ids = range(len(edges)) if kept is None else kept
    G.add_edges_from(edges[e] for e in ids)
    return G


def to_nx_multi(graph: RotationMultigraph) -> nx.MultiGraph:
    G = nx.MultiGraph()
    G.add_nodes_from(range(graph.n))
    G.add_edges_from(graph.edges)
    return G


def multigraph_edge_connectivity(graph: RotationMultigraph) -> int:
    """Global min cut with multiplicities as weights (networkx ignores parallel edges)."""
    G = nx.Graph()
    G.add_nodes_from(range(graph.n))
    for a, b in graph.edges:
        w = G.edges[a, b]["weight"] + 1 if G.has_edge(a, b) else 1
        G.add_edge(a, b, weight=w)
    if not nx.is_connected(G):
        return 0
    return nx.stoer_wagner(G)[0]


def random_rotation_graph(rng: random.Random, n: int, extra: int, simple: bool = True) -> RotationMultigraph:
    """Random connected graph (spanning tree plus ``extra`` edges) with a random rotation."""
    edges: list[tuple[int, int]] = []
    for v in range(1, n):
        edges.append((rng.randrange(v), v))
    pool = [p for p in combinations(range(n), 2) if p not in set(edges)]
    rng.shuffle(pool)
    if simple:
        edges += pool[:extra]
    else:
        edges += [tuple(rng.sample(range(n), 2)) for _ in range(extra)]
    rot: list[list[int]] = [[] for _ in range(n)]
    for e, (a, b) in enumerate(edges):
        rot[a].append(e)
        rot[b].append(e)
    for r in rot:
        rng.shuffle(r)
    return RotationMultigraph(n, tuple(edges), tuple(tuple(r) for r in rot))


@st.composite
def rotation_graphs(draw, max_n: int = 10, simple: bool = True):
    n = draw(st.integers(2, max_n))
    extra = draw(st.integers(0, n + 4))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_rotation_graph(random.Random(seed), n, extra, simple)


@st.composite
def drawings(draw, max_n: int = 10, max_m: int = 24):
    n = draw(st.integers(3, max_n))
    m = draw(st.integers(n - 1, max_m))
    seed = draw(st.integers(0, 2**32 - 1))
    d = random_drawing(np.random.default_rng(seed), n, m)
    if d is None:
        from hypothesis import reject

        reject()
    return d


@pytest.fixture(scope="session")
def rng() -> random.Random:
    return random.Random(12345)


def normalized_oracle(drawing: OnePlaneDrawing) -> tuple[int, int]:
    """(min components, max kappa over connected) across all 2^c one-per-pair choices, by networkx."""
    from itertools import product

    base = list(drawing.noncrossing_edges)
    pairs = [(c.first, c.second) for c in drawing.crossings]
    best_comp, best_kappa = drawing.graph.n + 1, 0
    for bits in product((0, 1), repeat=len(pairs)):
        kept = base + [p[b] for p, b in zip(pairs, bits)]
        G = to_nx(drawing, kept)
        comps = nx.number_connected_components(G)
        best_comp = min(best_comp, comps)
        if comps == 1:
            best_kappa = max(best_kappa, nx.node_connectivity(G))
    return best_comp, best_kappa


def raw_oracle(drawing: OnePlaneDrawing) -> tuple[int, int]:
    """Same statistics over every plane edge subset (only for a handful of edges)."""
    from itertools import product

    g = drawing.graph
    best_comp, best_kappa = g.n + 1, 0
    for bits in product((0, 1), repeat=g.m):
        kept = [e for e in range(g.m) if bits[e]]
        ks = set(kept)
        if any(c.first in ks and c.second in ks for c in drawing.crossings):
            continue
        G = to_nx(drawing, kept)
        comps = nx.number_connected_components(G)
        best_comp = min(best_comp, comps)
        if comps == 1:
            best_kappa = max(best_kappa, nx.node_connectivity(G))
    return best_comp, best_kappa
