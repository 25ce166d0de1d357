"""Straight-line drawings to combinatorial drawings.

Used to transcribe fixed pictures (the gadgets, the 24-vertex cubic figure) and to
sample random small 1-plane drawings.  Nothing geometric is kept afterwards.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .core import CrossingPair, OnePlaneDrawing, OnePlaneError, RotationMultigraph, validate_drawing

Point = tuple[float, float]

_EPS = 1e-9


def _orient(a: Point, b: Point, c: Point) -> float:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _on_segment(a: Point, b: Point, p: Point) -> bool:
    return (
        min(a[0], b[0]) - _EPS <= p[0] <= max(a[0], b[0]) + _EPS
        and min(a[1], b[1]) - _EPS <= p[1] <= max(a[1], b[1]) + _EPS
    )


def segments_cross(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    """Proper crossing of two segments without shared endpoints.

    Raises:
        OnePlaneError: if the segments touch or overlap degenerately.
    """
    d1 = _orient(q1, q2, p1)
    d2 = _orient(q1, q2, p2)
    d3 = _orient(p1, p2, q1)
    d4 = _orient(p1, p2, q2)
    if (abs(d1) < _EPS and _on_segment(q1, q2, p1)) or (abs(d2) < _EPS and _on_segment(q1, q2, p2)):
        raise OnePlaneError("a vertex lies on a non-incident edge")
    if (abs(d3) < _EPS and _on_segment(p1, p2, q1)) or (abs(d4) < _EPS and _on_segment(p1, p2, q2)):
        raise OnePlaneError("a vertex lies on a non-incident edge")
    return (d1 > 0) != (d2 > 0) and (d3 > 0) != (d4 > 0)


def _clockwise_key(origin: Point, target: Point) -> float:
    return -math.atan2(target[1] - origin[1], target[0] - origin[0])


def drawing_from_segments(points: Sequence[Point], edges: Sequence[tuple[int, int]]) -> OnePlaneDrawing:
    """Combinatorial drawing of the straight-line drawing ``(points, edges)``.

    Coordinates use the usual mathematical orientation (y up), so clockwise
    means decreasing angle.

    Raises:
        OnePlaneError: if some edge is crossed twice, adjacent edges cross,
            or the drawing is degenerate.
    """
    pts = [tuple(map(float, p)) for p in points]
    n = len(pts)
    for a, b in edges:
        if a == b:
            raise OnePlaneError("loops cannot be drawn straight")
    keys = {frozenset(e) for e in edges}
    if len(keys) != len(edges):
        raise OnePlaneError("parallel edges cannot be drawn straight")
    rotation = []
    incident: list[list[int]] = [[] for _ in range(n)]
    for e, (a, b) in enumerate(edges):
        incident[a].append(e)
        incident[b].append(e)
    for v in range(n):
        others = [(e, edges[e][1] if edges[e][0] == v else edges[e][0]) for e in incident[v]]
        others.sort(key=lambda t: _clockwise_key(pts[v], pts[t[1]]))
        rotation.append(tuple(e for e, _ in others))
    # bounding-box prefilter keeps the quadratic scan cheap
    arr = np.array([[pts[a][0], pts[a][1], pts[b][0], pts[b][1]] for a, b in edges]).reshape(-1, 4)
    lo = np.minimum(arr[:, :2], arr[:, 2:])
    hi = np.maximum(arr[:, :2], arr[:, 2:])
    crossings = []
    crossed: dict[int, int] = {}
    m = len(edges)
    for i in range(m):
        cand = np.nonzero(
            (lo[i + 1 :, 0] <= hi[i, 0] + _EPS)
            & (hi[i + 1 :, 0] >= lo[i, 0] - _EPS)
            & (lo[i + 1 :, 1] <= hi[i, 1] + _EPS)
            & (hi[i + 1 :, 1] >= lo[i, 1] - _EPS)
        )[0]
        for j in (cand + i + 1).tolist():
            a, b = edges[i]
            u, v = edges[j]
            if {a, b} & {u, v}:
                continue
            if not segments_cross(pts[a], pts[b], pts[u], pts[v]):
                continue
            for e in (i, j):
                if e in crossed:
                    raise OnePlaneError(f"edge {e} is crossed more than once")
                crossed[e] = len(crossings)
            # from the crossing, `a` and `b` point in opposite directions; the flag
            # records whether `u` comes right after `a` clockwise.
            ax, ay = pts[a][0] - pts[b][0], pts[a][1] - pts[b][1]
            ux, uy = pts[u][0] - pts[v][0], pts[u][1] - pts[v][1]
            turn = ax * uy - ay * ux
            flag = 0 if turn < 0 else 1
            crossings.append(CrossingPair(i, j, flag))
    graph = RotationMultigraph(n, tuple(tuple(e) for e in edges), tuple(rotation))
    return OnePlaneDrawing(graph, tuple(crossings))


def random_drawing(rng: np.random.Generator, n: int, m: int, max_tries: int = 200) -> OnePlaneDrawing | None:
    """Random connected straight-line 1-plane drawing on ``n`` points with about ``m`` edges.

    Edges are added in random order and skipped when they would violate
    1-planarity; returns None if no connected drawing was reached.
    """
    for _ in range(max_tries):
        pts = [tuple(p) for p in rng.random((n, 2))]
        pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
        order = rng.permutation(len(pairs))
        chosen: list[tuple[int, int]] = []
        crossed: set[int] = set()
        try:
            for idx in order.tolist():
                if len(chosen) >= m:
                    break
                a, b = pairs[idx]
                hits = []
                for j, (u, v) in enumerate(chosen):
                    if {a, b} & {u, v}:
                        continue
                    if segments_cross(pts[a], pts[b], pts[u], pts[v]):
                        hits.append(j)
                if len(hits) > 1 or any(j in crossed for j in hits):
                    continue
                if hits:
                    crossed.add(hits[0])
                    crossed.add(len(chosen))
                chosen.append((a, b))
        except OnePlaneError:
            continue
        d = drawing_from_segments(pts, chosen)
        if validate_drawing(d).ok:
            return d
    return None
