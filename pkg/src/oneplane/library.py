"""Built-in base graphs.

Small families are generated from coordinates; the two non-hamiltonian
cubic polyhedra are frozen as ``.1pg`` data files (see
``tools/freeze_data.py`` for how they were produced).  Nothing here is
trusted blindly: the test suite revalidates every entry.
"""

from __future__ import annotations

import math
from functools import lru_cache
from importlib import resources
from itertools import combinations
from typing import Mapping, Sequence

from .core import OnePlaneDrawing, OnePlaneError, RotationMultigraph
from .fileio import loads
from .geometry import drawing_from_segments

BASE_NAMES = ("prism3", "cube", "petersen", "nonham38", "nonham46")
PLANE_BASES = ("prism3", "cube", "nonham38", "nonham46")


def _circle(count: int, radius: float, phase: float = math.pi / 2) -> list[tuple[float, float]]:
    # clockwise from the top
    return [
        (radius * math.cos(phase - 2 * math.pi * i / count), radius * math.sin(phase - 2 * math.pi * i / count))
        for i in range(count)
    ]


def prism(n: int) -> RotationMultigraph:
    """Plane prism over an ``n``-cycle.

    Outer vertices ``u_i = i``, inner vertices ``v_i = n + i``; edges are
    listed as outer cycle ``u_i u_{i+1}``, inner cycle ``v_i v_{i+1}``, then
    spokes ``u_i v_i``, each block in order of ``i``.
    """
    if n < 3:
        raise OnePlaneError("prism needs a cycle of length at least 3")
    pts = _circle(n, 2.0) + _circle(n, 1.0)
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return drawing_from_segments(pts, edges).graph


def complete_graph(n: int) -> RotationMultigraph:
    """``K_n`` with the rotation of its straight-line drawing on a convex polygon.

    Plane only for ``n <= 4``; larger instances are used as abstract
    rotation systems.
    """
    edges = list(combinations(range(n), 2))
    if n <= 3:
        rot = [[e for e, (a, b) in enumerate(edges) if v in (a, b)] for v in range(n)]
        return RotationMultigraph(n, tuple(edges), tuple(tuple(r) for r in rot))
    if n == 4:
        pts = [(0.0, 2.0), (1.7, -1.0), (-1.7, -1.0), (0.0, 0.0)]
        return drawing_from_segments(pts, edges).graph
    pts = _circle(n, 1.0)
    # the convex drawing crosses chords; only its rotation is used
    rotation = []
    for v in range(n):
        inc = [e for e, (a, b) in enumerate(edges) if v in (a, b)]
        ang = {}
        for e in inc:
            w = edges[e][1] if edges[e][0] == v else edges[e][0]
            ang[e] = -math.atan2(pts[w][1] - pts[v][1], pts[w][0] - pts[v][0])
        rotation.append(tuple(sorted(inc, key=ang.__getitem__)))
    return RotationMultigraph(n, tuple(edges), tuple(rotation))


def petersen() -> RotationMultigraph:
    """The Petersen graph with an arbitrary (necessarily non-plane) rotation."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    edges = outer + inner + spokes
    rot = [tuple(e for e, (a, b) in enumerate(edges) if v in (a, b)) for v in range(10)]
    return RotationMultigraph(10, tuple(edges), tuple(rot))


def bundle(base: RotationMultigraph, multiplicity: Mapping[int, int] | Sequence[int]) -> RotationMultigraph:
    """Replace each edge ``e`` of ``base`` by ``multiplicity[e]`` parallel copies.

    Copies of one edge are consecutive in both rotations, listed in copy
    order at the first endpoint and in reverse at the second, so a plane
    base stays plane (the copies bound nested bigons).  Copy ``j`` of edge
    ``e`` gets id ``offset[e] + j`` with offsets in edge order.
    """
    mult = [multiplicity[e] for e in range(base.m)]
    if any(k < 1 for k in mult):
        raise OnePlaneError("multiplicities must be positive")
    offset = []
    edges = []
    for e, (a, b) in enumerate(base.edges):
        offset.append(len(edges))
        edges += [(a, b)] * mult[e]
    rotation = []
    for v in range(base.n):
        rot = []
        for e in base.rotation[v]:
            copies = [offset[e] + j for j in range(mult[e])]
            rot += copies if base.edges[e][0] == v else copies[::-1]
        rotation.append(tuple(rot))
    return RotationMultigraph(base.n, tuple(edges), tuple(rotation))


def bundle_copies(base: RotationMultigraph, multiplicity: Mapping[int, int] | Sequence[int]) -> list[list[int]]:
    """Edge ids of the copies of each base edge, as laid out by :func:`bundle`."""
    out = []
    nxt = 0
    for e in range(base.m):
        out.append(list(range(nxt, nxt + multiplicity[e])))
        nxt += multiplicity[e]
    return out


# Combinatorial transcription of the straight-line drawing of the inflated
# 4-prism with its crossing plan: integer coordinates, each polyline listed as a vertex path.
_FIGURE4_PATHS = (
    ((1, 0), (1, 1), (0, 1), (1, 0), (6, 1)),
    ((7, 1), (6, 1), (6, 0), (7, 1), (6, 6)),
    ((6, 7), (6, 6), (7, 6), (6, 7), (1, 6)),
    ((0, 6), (1, 6), (1, 7), (0, 6), (1, 1)),
    ((3, 2), (2, 3), (2, 2), (3, 2), (5, 3)),
    ((4, 2), (5, 2), (5, 3), (4, 2), (5, 4)),
    ((4, 5), (5, 4), (5, 5), (4, 5), (2, 4)),
    ((3, 5), (2, 5), (2, 4), (3, 5), (2, 3)),
    ((0, 1), (2, 2)),
    ((6, 0), (5, 2)),
    ((5, 5), (7, 6)),
    ((1, 7), (2, 5)),
)


def figure4_drawing() -> OnePlaneDrawing:
    """Straight-line 1-plane drawing of the crossed, inflated 4-prism (24 vertices, cubic)."""
    pts: list[tuple[int, int]] = []
    index: dict[tuple[int, int], int] = {}
    edges: list[tuple[int, int]] = []
    for path in _FIGURE4_PATHS:
        for p in path:
            if p not in index:
                index[p] = len(pts)
                pts.append(p)
        for a, b in zip(path, path[1:]):
            edges.append((index[a], index[b]))
    return drawing_from_segments(pts, edges)


@lru_cache(maxsize=None)
def load_data(name: str) -> OnePlaneDrawing:
    """Read ``<name>.1pg`` shipped in the package data directory."""
    text = resources.files("oneplane").joinpath("data", f"{name}.1pg").read_text(encoding="utf-8")
    return loads(text)


def base_graph(name: str) -> RotationMultigraph:
    """Built-in base graph by name.

    Raises:
        OnePlaneError: for an unknown name.
    """
    if name == "prism3":
        return prism(3)
    if name == "cube":
        return prism(4)
    if name == "petersen":
        return petersen()
    if name in ("nonham38", "nonham46"):
        return load_data(name).graph
    raise OnePlaneError(f"unknown base graph {name!r}; choose from {', '.join(BASE_NAMES)}")


def regular_test_base(k: int) -> RotationMultigraph:
    """A ``k``-regular ``k``-edge-connected multigraph for each ``k`` in 3..7.

    ``k = 3``: triangular prism; ``4``: ``K_5``; ``5``: ``K_6``; ``6``: ``K_4``
    with every edge doubled; ``7``: ``K_4`` with one perfect matching tripled
    and the other edges doubled.
    """
    if k == 3:
        return prism(3)
    if k == 4:
        return complete_graph(5)
    if k == 5:
        return complete_graph(6)
    k4 = complete_graph(4)
    if k == 6:
        return bundle(k4, [2] * k4.m)
    if k == 7:
        # edges of K4 in order: 01 02 03 12 13 23; {01, 23} is a perfect matching
        return bundle(k4, [3, 2, 2, 2, 2, 3])
    raise OnePlaneError("regular_test_base supports k in 3..7")
