from __future__ import annotations

import pytest
from hypothesis import given

from oneplane.constructions import gen_theorem2, gen_theorem4
from oneplane.fileio import ParseError, dumps, load, loads, save
from oneplane.library import load_data

from conftest import drawings

SMALL = """onePlane 1
# a square with both diagonals
vertex 0
vertex 1
vertex 2
vertex 3
edge 0 0 1
edge 1 1 2
edge 2 2 3
edge 3 3 0
edge 4 0 2
edge 5 1 3
rot 0 0 4 3
rot 1 1 5 0
rot 2 2 4 1
rot 3 3 5 2
cross 4 5 0
"""


def test_parse_small():
    d = loads(SMALL)
    assert d.graph.n == 4
    assert d.graph.m == 6
    assert d.crossings[0].first == 4
    assert d.graph.rotation[0] == (0, 4, 3)


@given(drawings())
def test_round_trip_random(d):
    back = loads(dumps(d))
    assert back == d


@pytest.mark.parametrize("make", [lambda: gen_theorem2(2), lambda: gen_theorem4(2)])
def test_round_trip_file(tmp_path, make):
    d = make()
    path = tmp_path / "x.1pg"
    save(d, path, "generated\ntwo lines")
    text = path.read_text()
    assert text.startswith("onePlane 1\n# generated\n# two lines\n")
    assert load(path) == d


def test_shipped_data_parses():
    for name in ("nonham38", "nonham46", "figure4"):
        assert load_data(name).graph.n > 0


@pytest.mark.parametrize(
    "text, lineno, fragment",
    [
        ("vertex 0\n", 1, "header"),
        ("", 1, "header"),
        ("onePlane 1\nvertex 0\nvertex 0\n", 3, "duplicate vertex"),
        ("onePlane 1\nvertex 1\n", 2, "dense"),
        ("onePlane 1\nvertex 0\nvertex 1\nedge 0 0 2\n", 4, "undeclared vertex"),
        ("onePlane 1\nvertex 0\nedge 0 0 0\n", 3, "loop"),
        ("onePlane 1\nvertex 0\nvertex 1\nedge 0 0 1\nedge 0 0 1\n", 5, "duplicate edge"),
        ("onePlane 1\nvertex 0\nvertex 1\nedge 0 0 1\nrot 0 0\n", 5, "missing rotation"),
        ("onePlane 1\nvertex 0\nvertex 1\nedge 0 0 1\nrot 0 0\nrot 0 0\n", 6, "duplicate rotation"),
        ("onePlane 1\nvertex 0\nrot 0 3\n", 3, "undeclared edge"),
        ("onePlane 1\nvertex x\n", 2, "integers"),
        ("onePlane 1\nface 0\n", 2, "unknown keyword"),
        ("onePlane 1\nvertex 0\nvertex 1\nedge 0 0 1\nrot 0 0\nrot 1 0\ncross 0 0 2\n", 7, "flag"),
        ("onePlane 1\nvertex 0\nvertex 1\nedge 0 0 1\nrot 0 0\nrot 1 0\ncross 0 5 0\n", 7, "undeclared edge"),
        ("onePlane 1\nedge 0 1\n", 2, "edge takes"),
    ],
)
def test_parse_errors(text, lineno, fragment):
    with pytest.raises(ParseError) as info:
        loads(text)
    assert info.value.lineno == lineno
    assert fragment in str(info.value)


def test_isolated_vertex_needs_no_rotation():
    d = loads("onePlane 1\nvertex 0\n")
    assert d.graph.rotation == ((),)
