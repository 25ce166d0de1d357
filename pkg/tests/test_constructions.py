from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oneplane.constructions import (
    CrossingPlan,
    PlanItem,
    attach_gadgets,
    canonical_cycle,
    construct_sevenreg,
    construct_theorem2,
    construct_theorem2_general,
    construct_theorem3,
    construct_theorem4,
    crossing_operation,
    gadget_only,
    inflate,
    sevenreg_base,
    tripled_cycle,
    walk_from_edges,
)
from oneplane.core import OnePlaneError, RotationMultigraph, genus, is_plane_subset, validate_drawing
from oneplane.library import base_graph, complete_graph, figure4_drawing, load_data, petersen, prism

from conftest import multigraph_edge_connectivity, to_nx


def contracted_isomorphic(c) -> bool:
    base = nx.MultiGraph()
    base.add_nodes_from(range(c.base.n))
    base.add_edges_from(c.base.edges)
    back = nx.MultiGraph()
    back.add_nodes_from(range(c.base.n))
    back.add_edges_from(c.imap.contract(c.drawing))
    return nx.is_isomorphic(base, back)


class TestInflation:
    @pytest.mark.parametrize("name", ["prism3", "cube", "nonham38"])
    def test_cubic_plane_base(self, name):
        base = base_graph(name)
        d, imap = inflate(base)
        assert d.graph.n == 2 * base.m
        assert d.graph.m == 3 * base.m
        assert d.graph.is_regular(3)
        assert genus(d.graph) == 0
        assert sorted(map(sorted, imap.contract(d))) == sorted(map(sorted, base.edges))

    def test_cycle_vertex_rotation(self):
        base = prism(3)
        d, imap = inflate(base)
        for w in range(base.n):
            cyc, ce = imap.cycles[w], imap.cycle_edges[w]
            for i, e in enumerate(base.rotation[w]):
                assert d.graph.rotation[cyc[i]] == (e, ce[i], ce[i - 1])
                assert imap.end_vertex(w, e) == cyc[i]

    def test_low_degree_rejected(self):
        c4 = RotationMultigraph(4, tuple((i, (i + 1) % 4) for i in range(4)), tuple(((i - 1) % 4, i) for i in range(4)))
        with pytest.raises(OnePlaneError):
            inflate(c4)

    @settings(max_examples=15, deadline=None)
    @given(st.integers(0, 10**6), st.sampled_from([4, 5, 6]))
    def test_any_rotation_gives_regular_connected(self, seed, k):
        base = complete_graph(k + 1)
        rng = random.Random(seed)
        rot = []
        for r in base.rotation:
            r = list(r)
            rng.shuffle(r)
            rot.append(tuple(r))
        g = RotationMultigraph(base.n, base.edges, tuple(rot))
        d, imap = inflate(g)
        h = attach_gadgets(d, imap).graph
        assert h.is_regular(k)
        assert nx.node_connectivity(to_nx(h)) == k

    def test_clusters_cover_vertices(self):
        c = construct_theorem4(2)
        clusters = c.clusters()
        assert sorted(v for cl in clusters for v in cl) == list(range(c.drawing.graph.n))
        assert all(len(cl) == 13 for cl in clusters)


class TestPlans:
    def test_canonical_cycle_is_order_free(self):
        base = prism(4)
        inner = [4, 5, 6, 7]
        a = canonical_cycle(base, inner)
        b = canonical_cycle(base, inner[::-1])
        assert a == b
        assert a.vertices[0] == min(a.vertices)
        assert a.closed

    def test_bigon(self):
        base, copies = tripled_cycle(4)
        item = canonical_cycle(base, copies[0][1:])
        assert len(item.vertices) == 2
        pairs = item.pairs()
        assert len(pairs) == 1
        assert pairs[0][0] == max(item.vertices)

    def test_walk_from_edges_path(self):
        base = prism(4)
        item = walk_from_edges(base, [8, 0], False, start=4)
        assert item.vertices == (4, 0, 1)
        assert item.pairs() == [(0, 8, 0)]

    def test_open_walk_must_close(self):
        with pytest.raises(OnePlaneError):
            walk_from_edges(prism(4), [0, 1], True)

    def test_check_finds_problems(self):
        base = prism(4)
        assert CrossingPlan((PlanItem((0, 1, 2), (0, 1), False),)).check(base) == []
        assert CrossingPlan((PlanItem((0, 1), (0,), False),)).check(base)
        assert CrossingPlan((PlanItem((0, 1, 2), (0, 0), False),)).check(base)
        twice = CrossingPlan((PlanItem((0, 1, 2), (0, 1), False), PlanItem((0, 1, 2), (0, 1), False)))
        assert twice.check(base)

    def test_non_consecutive_rejected(self):
        base, copies = tripled_cycle(4)
        # at vertex 1 the rotation is 2 1 0 3 4 5, so copies 1 and 4 are not neighbours
        assert base.rotation[1] == (2, 1, 0, 3, 4, 5)
        plan = CrossingPlan((PlanItem((0, 1, 2), (1, 4), False),))
        assert any("not consecutive" in p for p in plan.check(base))
        d, imap = inflate(base)
        with pytest.raises(OnePlaneError):
            crossing_operation(attach_gadgets(d, imap), imap, plan)

    def test_twice_crossed_rejected(self):
        c = construct_theorem2(2)
        with pytest.raises(OnePlaneError):
            crossing_operation(c.drawing, c.imap, c.plan)


class TestFamilies:
    def test_theorem2_k2(self):
        c = construct_theorem2(2)
        d = c.drawing
        assert (d.graph.n, d.graph.m, len(d.crossings), len(d.crossing_edges)) == (24, 36, 6, 12)
        assert validate_drawing(d).ok
        assert d.graph.is_regular(3)
        assert nx.node_connectivity(to_nx(d)) == 3
        assert contracted_isomorphic(c)

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_theorem2_counts(self, k):
        d = construct_theorem2(k).drawing
        assert len(d.crossing_edges) == 6 * k
        assert validate_drawing(d).ok

    def test_theorem2_rejects_k1(self):
        with pytest.raises(OnePlaneError):
            construct_theorem2(1)

    def test_figure4_matches_generator(self):
        fig = figure4_drawing()
        gen = construct_theorem2(2).drawing
        assert validate_drawing(fig).ok
        assert len(fig.crossings) == len(gen.crossings) == 6
        assert nx.is_isomorphic(to_nx(fig), to_nx(gen))
        assert load_data("figure4") == fig

    def test_theorem2_general_cube(self):
        c = construct_theorem2_general(prism(4))
        d = c.drawing
        assert validate_drawing(d).ok
        assert (d.graph.n, d.graph.m, len(d.crossings)) == (24, 36, 6)
        assert c.extras["leftover"] is None

    def test_theorem2_general_rejects_small(self):
        with pytest.raises(OnePlaneError):
            construct_theorem2_general(prism(3))

    def test_theorem3_prism3(self):
        c = construct_theorem3(prism(3))
        d = c.drawing
        assert (d.graph.n, d.graph.m, len(d.crossings)) == (24, 48, 12)
        assert d.graph.is_regular(4)
        assert nx.node_connectivity(to_nx(d)) == 4
        assert multigraph_edge_connectivity(c.base) == 4
        matching = set(c.extras["matching"])
        assert len(matching) == 3
        assert c.extras["coloring"].is_proper(prism(3))

    def test_theorem3_nonham38(self):
        c = construct_theorem3(base_graph("nonham38"))
        d = c.drawing
        assert (d.graph.n, d.graph.m, len(d.crossings)) == (152, 304, 76)
        assert validate_drawing(d).ok
        assert contracted_isomorphic(c)

    @settings(max_examples=8, deadline=None)
    @given(st.integers(0, 1000))
    def test_theorem3_any_colouring(self, seed):
        c = construct_theorem3(prism(4), seed=seed)
        assert validate_drawing(c.drawing).ok
        assert c.drawing.graph.is_regular(4)

    def test_theorem3_rejects_petersen(self):
        with pytest.raises(OnePlaneError):
            construct_theorem3(petersen())

    @pytest.mark.parametrize("k", [2, 3])
    def test_theorem4(self, k):
        c = construct_theorem4(k)
        d = c.drawing
        n = 2 * k
        assert (d.graph.n, d.graph.m) == (13 * n, 39 * n)
        assert len(d.crossings) == 6 * n + 3 * k
        assert d.graph.is_regular(6)
        assert validate_drawing(d).ok
        assert nx.node_connectivity(to_nx(d)) == 6

    def test_tripled_cycle(self):
        g, copies = tripled_cycle(4)
        assert g.is_regular(6)
        assert genus(g) == 0
        assert [len(c) for c in copies] == [3] * 4

    def test_sevenreg(self):
        base, copies = sevenreg_base(2)
        assert base.is_regular(7)
        assert genus(base) == 0
        c = construct_sevenreg(2)
        d = c.drawing
        assert (d.graph.n, d.graph.m, len(d.crossings)) == (344, 1204, 238)
        assert len(c.plan.pairs()) == 7 * 2
        assert d.graph.is_regular(7)
        assert validate_drawing(d).ok

    def test_gadget_only(self):
        assert gadget_only(6).graph.n == 13

    @pytest.mark.parametrize("make", [lambda: construct_theorem2(2), lambda: construct_theorem3(prism(3)), lambda: construct_theorem4(2)])
    def test_noncrossing_plus_first_is_plane(self, make):
        d = make().drawing
        assert is_plane_subset(d, list(d.noncrossing_edges) + [c.first for c in d.crossings])
