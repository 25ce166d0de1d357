"""The four built-in k-gadgets (k = 4..7), transcribed from straight-line pictures.

Every gadget is relabelled so that its outer cycle is ``0 .. k-1`` in
clockwise order and interior vertices follow.  Correctness is never
assumed: :meth:`Gadget.check` runs the face and apex tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .core import (
    CrossingPair,
    OnePlaneDrawing,
    OnePlaneError,
    RotationMultigraph,
    face_vertices,
    genus,
    planarize,
    trace_faces,
    validate_drawing,
)
from .geometry import drawing_from_segments

GADGET_SIZES = (4, 5, 6, 7)


@dataclass(frozen=True)
class Gadget:
    """A 1-plane drawing whose outer face is the cycle ``outer_cycle``.

    ``outer_cycle[i]`` is joined to ``outer_cycle[i + 1]`` and the cycle is
    listed clockwise, so the rotation at ``outer_cycle[i]`` reads
    (edge to next, interior edges..., edge to previous).
    """

    drawing: OnePlaneDrawing
    outer_cycle: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.outer_cycle)

    @cached_property
    def cycle_edges(self) -> tuple[int, ...]:
        """Edge id of ``outer_cycle[i] -- outer_cycle[i+1]`` for each ``i``."""
        g = self.drawing.graph
        out = []
        for i, v in enumerate(self.outer_cycle):
            w = self.outer_cycle[(i + 1) % self.k]
            out.append(next(e for e in g.incidence[v] if set(g.edges[e]) == {v, w}))
        return tuple(out)

    def interior_at(self, i: int) -> tuple[int, ...]:
        """Interior edges at ``outer_cycle[i]`` in clockwise order."""
        g = self.drawing.graph
        v = self.outer_cycle[i]
        nxt, prv = self.cycle_edges[i], self.cycle_edges[i - 1]
        rot = g.rotation[v]
        j = rot.index(nxt)
        seq = rot[j + 1 :] + rot[:j]
        if not seq or seq[-1] != prv:
            raise OnePlaneError("outer cycle is not a face with the interior on the clockwise side")
        return seq[:-1]

    def interior_edges(self) -> list[int]:
        cyc = set(self.cycle_edges)
        return [e for e in range(self.drawing.graph.m) if e not in cyc]

    def apex_closure(self) -> RotationMultigraph:
        """Add a vertex adjacent to every outer-cycle vertex, drawn in the outer face."""
        g = self.drawing.graph
        x = g.n
        edges = list(g.edges) + [(v, x) for v in self.outer_cycle]
        apex_edge = {v: g.m + i for i, v in enumerate(self.outer_cycle)}
        rotation = [list(r) for r in g.rotation]
        for i, v in enumerate(self.outer_cycle):
            rot = rotation[v]
            j = rot.index(self.cycle_edges[i])
            rotation[v] = rot[:j] + [apex_edge[v]] + rot[j:]
        # seen from outside, the clockwise cycle runs the other way round
        rotation.append([apex_edge[v] for v in reversed(self.outer_cycle)])
        return RotationMultigraph(x + 1, tuple(edges), tuple(tuple(r) for r in rotation))

    def apex_drawing(self) -> OnePlaneDrawing:
        return OnePlaneDrawing(self.apex_closure(), self.drawing.crossings)

    def check(self) -> list[str]:
        """Problems with the gadget contract (empty when it holds).

        The connectivity half of the contract is checked by the caller,
        since it needs :mod:`oneplane.connalg`.
        """
        problems = list(validate_drawing(self.drawing).violations)
        if problems:
            return problems
        try:
            for i in range(self.k):
                self.interior_at(i)
        except OnePlaneError as exc:
            return [str(exc)]
        census = trace_faces(planarize(self.drawing).graph)
        if sorted(self.outer_cycle) not in [sorted(face_vertices(planarize(self.drawing).graph, f)) for f in census.faces]:
            problems.append("outer cycle is not a face")
        apex = self.apex_drawing()
        if not validate_drawing(apex).ok:
            problems.append("apex closure is not 1-plane")
        degs = set(apex.graph.degrees())
        if degs != {self.k}:
            problems.append(f"apex closure degrees {sorted(degs)}, expected {self.k}")
        return problems


def _from_picture(points, edges, outer) -> Gadget:
    """Relabel a straight-line picture so that ``outer`` (clockwise) becomes ``0..k-1``."""
    k = len(outer)
    order = list(outer) + [v for v in range(len(points)) if v not in set(outer)]
    new = {v: i for i, v in enumerate(order)}
    pts = [points[v] for v in order]
    edges = sorted((min(new[a], new[b]), max(new[a], new[b])) for a, b in edges)
    drawing = drawing_from_segments(pts, edges)
    return Gadget(drawing, tuple(range(k)))


def _polar(r: float, deg: float) -> tuple[float, float]:
    return (r * math.cos(math.radians(deg)), r * math.sin(math.radians(deg)))


def _gadget4() -> Gadget:
    pts = [_polar(1, 90 - 90 * i) for i in range(4)]
    edges = [(i, (i + 1) % 4) for i in range(4)] + [(0, 2), (1, 3)]
    return _from_picture(pts, edges, [0, 1, 2, 3])


def _gadget5() -> Gadget:
    # outer pentagon clockwise; chord i-(i+2) meets chords (i-1)-(i+1) and (i+1)-(i+3)
    outer = [_polar(1, 90 - 72 * i) for i in range(5)]
    rin = math.cos(math.radians(72)) / math.cos(math.radians(36))
    inner = [_polar(rin, 90 - 72 * i + 180) for i in range(5)]  # inner[j] is opposite outer[j]
    pts = outer + inner + [(0.0, 0.0)]
    edges = [(i, (i + 1) % 5) for i in range(5)]
    for i in range(5):
        a, b = i, (i + 2) % 5
        # the two intersection points on chord a-b sit opposite a's and b's neighbours
        p, q = 5 + (i + 4) % 5, 5 + (i + 3) % 5
        p, q = sorted((p, q), key=lambda v: math.dist(pts[a], pts[v]))
        edges += [(a, p), (p, q), (q, b)]
    edges += [(5 + j, 10) for j in range(5)]
    return _from_picture(pts, edges, list(range(5)))


def _gadget6() -> Gadget:
    # hexagon at 90, 30, -30, ...; ring vertex j is the midpoint of the short
    # chord (j-1)-(j+1), which lies on the long diagonal through vertex j
    outer = [_polar(1, 90 - 60 * i) for i in range(6)]
    ring = [_polar(0.5, 90 - 60 * i + 180) for i in range(6)]
    # ring[j] sits at the midpoint of short chord (j+2)-(j+4)  (opposite side)
    pts = outer + ring + [(0.0, 0.0)]
    edges = [(i, (i + 1) % 6) for i in range(6)]
    for j in range(6):
        a, b = (j + 2) % 6, (j + 4) % 6
        edges += [(a, 6 + j), (6 + j, b)]
    edges += [(6 + j, 6 + (j + 1) % 6) for j in range(6)]
    for i in range(3):
        # long diagonal i -- i+3 passes ring[i+3] (near i), the centre, ring[i] (near i+3)
        edges += [(i, 6 + (i + 3) % 6), (6 + (i + 3) % 6, 12), (12, 6 + i), (6 + i, i + 3)]
    return _from_picture(pts, edges, list(range(6)))


def _gadget7() -> Gadget:
    pts: dict[str, tuple[float, float]] = {"A0": (0.0, 0.0)}
    for k in range(1, 8):
        a = (4 * k + 3) * math.pi / 14
        pts[f"A{k}"] = (0.5 * math.cos(a), 0.5 * math.sin(a))
        pts[f"D{k}"] = (2 * math.cos(a), 2 * math.sin(a))
    for k in range(1, 15):
        a = k * math.pi / 7
        pts[f"B{k}"] = (math.cos(a), math.sin(a))
        pts[f"C{k}"] = (1.5 * math.cos(a), 1.5 * math.sin(a))
    names: list[list[str]] = [
        [f"A{k}" for k in range(1, 8)] + ["A1"],
        [f"B{k}" for k in range(1, 15)] + ["B1"],
        [f"C{k}" for k in range(1, 15)] + ["C1"],
        [f"D{k}" for k in range(1, 8)] + ["D1"],
    ]
    names += [["A0", f"A{k}"] for k in range(1, 8)]
    names += [[f"B{k}", f"C{k}"] for k in range(1, 15)]
    long_paths = (
        "A1 B3 C4 D1 C3 B4 A1 B5 C4 D2 C5 B6 A2 B5 C6 D2 C7 B6 A3",
        "A3 B7 C8 D3 C7 B8 A3 B9 C8 D4 C9 B10 A4 B9 C10 D4 C11 B10 A5",
        "A5 B11 C12 D5 C11 B12 A5 B13 C12 D6 C13 B14 A6 B13 C14 D6 C1 B14 A7",
        "A7 B1 C2 D7 C1 B2 A7 B3 C2 D1 C5 B4 A2 B7 C6 D3 C9 B8 A4",
        "A4 B11 C10 D5 C13 B12 A6 B1 C14 D7 C3 B2 A1",
    )
    names += [p.split() for p in long_paths]
    ids = sorted(pts)
    index = {v: i for i, v in enumerate(ids)}
    edges = [(index[a], index[b]) for path in names for a, b in zip(path, path[1:])]
    outer = [index[f"D{k}"] for k in range(7, 0, -1)]  # decreasing angle = clockwise
    return _from_picture([pts[v] for v in ids], edges, outer)


_BUILDERS = {4: _gadget4, 5: _gadget5, 6: _gadget6, 7: _gadget7}


@lru_cache(maxsize=None)
def gadget(k: int) -> Gadget:
    """The built-in ``k``-gadget.

    Raises:
        OnePlaneError: for ``k`` outside 4..7.
    """
    if k not in _BUILDERS:
        raise OnePlaneError(f"no gadget for k={k}; gadgets exist for k in 4..7")
    return _BUILDERS[k]()
