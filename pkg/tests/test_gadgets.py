from __future__ import annotations

import networkx as nx
import pytest

from oneplane.core import OnePlaneError, genus, planarize, validate_drawing
from oneplane.gadgets import GADGET_SIZES, gadget

from conftest import to_nx

SIZES = {4: (4, 6, 1), 5: (11, 25, 0), 6: (13, 36, 6), 7: (43, 147, 28)}


@pytest.mark.parametrize("k", GADGET_SIZES)
def test_contract(k):
    g = gadget(k)
    assert g.k == k
    assert g.outer_cycle == tuple(range(k))
    assert g.check() == []


@pytest.mark.parametrize("k", GADGET_SIZES)
def test_sizes(k):
    d = gadget(k).drawing
    assert (d.graph.n, d.graph.m, len(d.crossings)) == SIZES[k]


@pytest.mark.parametrize("k", GADGET_SIZES)
def test_apex_closure_connectivity_networkx(k):
    closure = gadget(k).apex_closure()
    assert closure.is_regular(k)
    assert nx.node_connectivity(to_nx(closure)) == k


@pytest.mark.parametrize("k", GADGET_SIZES)
def test_rotation_at_outer_vertices(k):
    g = gadget(k)
    rot = g.drawing.graph.rotation
    for i in range(k):
        interior = g.interior_at(i)
        assert len(interior) == k - 3
        j = rot[i].index(g.cycle_edges[i])
        assert rot[i][j:] + rot[i][:j] == (g.cycle_edges[i], *interior, g.cycle_edges[i - 1])


@pytest.mark.parametrize("k", GADGET_SIZES)
def test_apex_drawing_is_1_plane(k):
    apex = gadget(k).apex_drawing()
    assert validate_drawing(apex).ok
    assert genus(planarize(apex).graph) == 0


def test_gadget4_closure_is_k5():
    assert nx.is_isomorphic(to_nx(gadget(4).apex_closure()), nx.complete_graph(5))


@pytest.mark.parametrize("k", [3, 8])
def test_unknown_size(k):
    with pytest.raises(OnePlaneError):
        gadget(k)


def test_interior_degrees():
    for k in GADGET_SIZES:
        g = gadget(k)
        degs = g.drawing.graph.degrees()
        assert set(degs[k:]) <= {k}
        assert set(degs[:k]) == {k - 1}
