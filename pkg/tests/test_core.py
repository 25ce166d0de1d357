from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oneplane.core import (
    CrossingPair,
    DisconnectedError,
    InvalidDrawingError,
    OnePlaneDrawing,
    OnePlaneError,
    RotationMultigraph,
    crossing_flag,
    genus,
    is_plane_subset,
    planarize,
    relabel_check,
    trace_faces,
    unplanarize,
    validate,
    validate_drawing,
)
from oneplane.geometry import drawing_from_segments
from oneplane.library import complete_graph, petersen, prism

from conftest import drawings, rotation_graphs


def square_with_diagonals() -> OnePlaneDrawing:
    return drawing_from_segments([(0, 1), (1, 1), (1, 0), (0, 0)], [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])


class TestRotationSystem:
    def test_cube_faces(self):
        census = trace_faces(prism(4))
        assert len(census.faces) == 6
        assert census.genus == 0
        assert census.face_lengths == [4] * 6

    def test_prism3_faces(self):
        assert sorted(trace_faces(prism(3)).face_lengths) == [3, 3, 4, 4, 4]

    def test_k4_plane(self):
        assert genus(complete_graph(4)) == 0

    def test_petersen_rotation_not_plane(self):
        assert genus(petersen()) >= 1

    def test_from_neighbor_rotation(self):
        g = RotationMultigraph.from_neighbor_rotation([[1, 2], [2, 0], [0, 1]])
        assert g.m == 3
        assert genus(g) == 0
        assert validate(g).ok

    def test_successor_and_predecessor(self):
        g = prism(3)
        for v in range(g.n):
            for e in g.rotation[v]:
                assert g.predecessor(v, g.successor(v, e)) == e
                assert g.consecutive(v, e, g.successor(v, e))

    def test_validate_missing_edge(self):
        g = RotationMultigraph(3, ((0, 1), (1, 2)), ((0,), (0,), (1,)))
        assert not validate(g).ok

    def test_validate_duplicated_edge(self):
        g = RotationMultigraph(2, ((0, 1),), ((0, 0), (0,)))
        assert not validate(g).ok

    def test_disconnected_faces_raise(self):
        g = RotationMultigraph(4, ((0, 1), (2, 3)), ((0,), (0,), (1,), (1,)))
        with pytest.raises(DisconnectedError):
            trace_faces(g)

    @given(rotation_graphs(max_n=12, simple=False))
    def test_euler_formula(self, g):
        census = trace_faces(g)
        assert sum(census.face_lengths) == 2 * g.m
        assert g.n - g.m + len(census.faces) == 2 - 2 * census.genus
        assert 0 <= census.genus <= (g.m - g.n + 1) // 2 + 1

    @given(rotation_graphs(max_n=12))
    def test_mirror_keeps_genus(self, g):
        assert genus(g.mirror()) == genus(g)

    @given(rotation_graphs(max_n=8))
    def test_relabel_identity(self, g):
        assert relabel_check(g, g, {e: e for e in range(g.m)})


class TestDrawings:
    def test_square_with_diagonals(self):
        d = square_with_diagonals()
        assert len(d.crossings) == 1
        assert validate_drawing(d).ok
        assert d.crossing_edges == {4, 5}
        assert d.partner[4] == 5
        assert d.noncrossing_edges == (0, 1, 2, 3)
        assert d.crossing_of(5) == 0
        assert d.crossing_of(0) is None

    def test_wrong_flag_is_not_plane(self):
        d = square_with_diagonals()
        c = d.crossings[0]
        flipped = OnePlaneDrawing(d.graph, (CrossingPair(c.first, c.second, 1 - c.flag),))
        assert not validate_drawing(flipped).ok

    def test_planarize_rotation_for_flags(self):
        d = square_with_diagonals()
        p = planarize(d)
        dummy = p.dummy[0]
        assert dummy == d.graph.n
        assert p.graph.degree(dummy) == 4
        a, b = d.crossings[0].first, d.crossings[0].second
        ra, rb = p.segments[a][1], p.segments[b][1]
        if d.crossings[0].flag == 0:
            assert p.graph.rotation[dummy] == (a, b, ra, rb)
        else:
            assert p.graph.rotation[dummy] == (a, rb, ra, b)

    def test_crossing_flag(self):
        g = square_with_diagonals().graph
        # edge 4 = (0, 2), edge 5 = (1, 3)
        assert crossing_flag(g, 4, 5, [(4, 0), (5, 1), (4, 2), (5, 3)]) == 0
        assert crossing_flag(g, 4, 5, [(4, 0), (5, 3), (4, 2), (5, 1)]) == 1
        with pytest.raises(OnePlaneError):
            crossing_flag(g, 4, 5, [(4, 0), (4, 2), (5, 1), (5, 3)])

    def test_edge_in_two_pairs_rejected(self):
        g = complete_graph(4)
        d = OnePlaneDrawing(g, (CrossingPair(0, 5), CrossingPair(0, 5)))
        assert not validate_drawing(d).ok
        with pytest.raises(InvalidDrawingError):
            planarize(d)

    def test_adjacent_pair_rejected(self):
        g = complete_graph(4)
        d = OnePlaneDrawing(g, (CrossingPair(0, 1),))
        assert not validate_drawing(d).ok

    def test_undeclared_crossing_not_sphere(self):
        g = complete_graph(5)
        assert not validate_drawing(OnePlaneDrawing(g)).ok

    def test_convex_k5_is_not_1_plane(self):
        import math

        pts = [(math.cos(2 * math.pi * i / 5), math.sin(2 * math.pi * i / 5)) for i in range(5)]
        edges = [(a, b) for a in range(5) for b in range(a + 1, 5)]
        with pytest.raises(OnePlaneError):
            drawing_from_segments(pts, edges)

    @given(drawings())
    def test_planarize_round_trip(self, d):
        p = planarize(d)
        c = len(d.crossings)
        assert p.graph.n == d.graph.n + c
        assert p.graph.m == d.graph.m + 2 * c
        assert genus(p.graph) == 0
        assert all(p.graph.degree(x) == 4 for x in p.dummy)
        back = unplanarize(p)
        assert back.edges == d.graph.edges
        assert back.rotation == d.graph.rotation

    @given(drawings(), st.data())
    def test_plane_subset_downward_closed(self, d, data):
        kept = data.draw(st.sets(st.integers(0, d.graph.m - 1)))
        if is_plane_subset(d, kept):
            drop = data.draw(st.sets(st.sampled_from(sorted(kept)))) if kept else set()
            assert is_plane_subset(d, kept - drop)
        else:
            assert any(c.first in kept and c.second in kept for c in d.crossings)

    def test_plane_subset_rejects_unknown_edge(self):
        with pytest.raises(OnePlaneError):
            is_plane_subset(square_with_diagonals(), [99])

    @settings(max_examples=30)
    @given(drawings())
    def test_noncrossing_edges_always_plane(self, d):
        assert is_plane_subset(d, d.noncrossing_edges)
        assert is_plane_subset(d, list(d.noncrossing_edges) + [c.first for c in d.crossings])
