"""Rotation-system multigraphs and 1-plane drawings.

A :class:`RotationMultigraph` stores, for every vertex, the clockwise cyclic
order of its incident edge ids.  A :class:`OnePlaneDrawing` adds a set of
:class:`CrossingPair` records; it is a valid 1-plane drawing when its
planarization (every crossing point turned into a degree-4 dummy vertex) is a
connected genus-0 embedding.

Darts are encoded as ``2 * edge + side``: side 0 runs from ``edges[e][0]`` to
``edges[e][1]``, side 1 runs backwards.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence


class OnePlaneError(ValueError):
    """Base class for errors raised by this package."""


class InvalidDrawingError(OnePlaneError):
    pass


class DisconnectedError(OnePlaneError):
    pass


@dataclass(frozen=True)
class Verdict:
    """Outcome of a validation: ``ok`` iff there are no violations."""

    violations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class RotationMultigraph:
    """Loopless multigraph with a clockwise rotation at every vertex.

    Vertex ids are ``0 .. n-1`` and edge ids are ``0 .. len(edges)-1``.
    Instances are not validated on construction; call :func:`validate`.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    rotation: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        object.__setattr__(self, "rotation", tuple(tuple(r) for r in self.rotation))

    @classmethod
    def from_neighbor_rotation(cls, rotation: Sequence[Sequence[int]]) -> RotationMultigraph:
        """Build a simple graph from clockwise neighbour lists."""
        n = len(rotation)
        edges: list[tuple[int, int]] = []
        index: dict[tuple[int, int], int] = {}
        for u, nbrs in enumerate(rotation):
            for w in nbrs:
                key = (min(u, w), max(u, w))
                if key not in index:
                    index[key] = len(edges)
                    edges.append(key)
        rot = [[index[(min(u, w), max(u, w))] for w in nbrs] for u, nbrs in enumerate(rotation)]
        return cls(n, tuple(edges), tuple(tuple(r) for r in rot))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def degrees(self) -> list[int]:
        return [len(r) for r in self.rotation]

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if v == a else a

    @cached_property
    def position(self) -> tuple[dict[int, int], ...]:
        return tuple({e: i for i, e in enumerate(r)} for r in self.rotation)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Incident edge ids per vertex in edge-id order (independent of rotation)."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for e, (a, b) in enumerate(self.edges):
            inc[a].append(e)
            if b != a:
                inc[b].append(e)
        return tuple(tuple(x) for x in inc)

    def neighbors(self, v: int) -> list[int]:
        return [self.other(e, v) for e in self.incidence[v]]

    def is_regular(self, k: int | None = None) -> bool:
        degs = set(self.degrees())
        return len(degs) == 1 and (k is None or degs == {k})

    def is_simple(self) -> bool:
        seen = {frozenset(e) for e in self.edges}
        return len(seen) == self.m

    def successor(self, v: int, e: int) -> int:
        """Edge following ``e`` clockwise in the rotation of ``v``."""
        r = self.rotation[v]
        return r[(self.position[v][e] + 1) % len(r)]

    def predecessor(self, v: int, e: int) -> int:
        r = self.rotation[v]
        return r[(self.position[v][e] - 1) % len(r)]

    def consecutive(self, v: int, e: int, f: int) -> bool:
        return self.successor(v, e) == f or self.successor(v, f) == e

    def mirror(self) -> RotationMultigraph:
        return RotationMultigraph(self.n, self.edges, tuple(tuple(reversed(r)) for r in self.rotation))


def validate(graph: RotationMultigraph) -> Verdict:
    """Check the rotation-system invariants of ``graph``."""
    problems: list[str] = []
    if len(graph.rotation) != graph.n:
        problems.append(f"rotation given for {len(graph.rotation)} vertices, expected {graph.n}")
    for e, (a, b) in enumerate(graph.edges):
        if not (0 <= a < graph.n and 0 <= b < graph.n):
            problems.append(f"edge {e} has dangling endpoint ({a}, {b})")
        elif a == b:
            problems.append(f"edge {e} is a loop at {a}")
    expected: list[list[int]] = [[] for _ in range(graph.n)]
    for e, (a, b) in enumerate(graph.edges):
        if 0 <= a < graph.n and 0 <= b < graph.n and a != b:
            expected[a].append(e)
            expected[b].append(e)
    for v, rot in enumerate(graph.rotation[: graph.n]):
        for e in rot:
            if not 0 <= e < graph.m:
                problems.append(f"rotation at {v} lists dangling edge id {e}")
        if sorted(rot) != sorted(expected[v]):
            missing = sorted(set(expected[v]) - set(rot))
            if missing:
                problems.append(f"rotation incomplete at {v}: missing {missing}")
            extra = sorted(e for e in set(rot) if 0 <= e < graph.m and e not in expected[v])
            if extra:
                problems.append(f"rotation at {v} lists non-incident edges {extra}")
            if len(rot) != len(set(rot)):
                problems.append(f"rotation at {v} repeats an edge")
            if len(rot) != len(expected[v]):
                problems.append(f"degree/rotation mismatch at {v}: degree {len(expected[v])}, rotation length {len(rot)}")
    return Verdict(tuple(problems))


def components(n: int, edges: Iterable[tuple[int, int]]) -> list[list[int]]:
    """Connected components of ``({0..n-1}, edges)``, each sorted, ordered by least vertex."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values(), key=lambda c: c[0])


@dataclass(frozen=True)
class FaceCensus:
    faces: tuple[tuple[int, ...], ...]
    genus: int

    @property
    def face_lengths(self) -> list[int]:
        return [len(f) for f in self.faces]


def _next_dart(graph: RotationMultigraph, dart: int) -> int:
    e, side = divmod(dart, 2)
    head = graph.edges[e][1 - side]
    f = graph.successor(head, e)
    return 2 * f + (0 if graph.edges[f][0] == head else 1)


def trace_faces(graph: RotationMultigraph) -> FaceCensus:
    """Face walks of the embedding defined by the rotation system.

    Raises:
        DisconnectedError: if ``graph`` is not connected.
    """
    if len(components(graph.n, graph.edges)) > 1:
        raise DisconnectedError("face tracing requires connected graph")
    seen = [False] * (2 * graph.m)
    faces = []
    for start in range(2 * graph.m):
        if seen[start]:
            continue
        walk = []
        d = start
        while not seen[d]:
            seen[d] = True
            walk.append(d)
            d = _next_dart(graph, d)
        faces.append(tuple(walk))
    chi = graph.n - graph.m + len(faces)
    if graph.m == 0:
        # a single isolated vertex is a sphere with one face
        return FaceCensus(((),), 0)
    return FaceCensus(tuple(faces), (2 - chi) // 2)


def dart_tail(graph: RotationMultigraph, dart: int) -> int:
    e, side = divmod(dart, 2)
    return graph.edges[e][side]


def face_vertices(graph: RotationMultigraph, face: Sequence[int]) -> list[int]:
    return [dart_tail(graph, d) for d in face]


def genus(graph: RotationMultigraph) -> int:
    return trace_faces(graph).genus


@dataclass(frozen=True)
class CrossingPair:
    """Two edges that cross once.

    With ``first = (x, y)`` and ``second = (u, v)`` read from the declared
    endpoint order, flag 0 means the clockwise order of the four ends around
    the crossing point is ``first@x, second@u, first@y, second@v``; flag 1
    swaps the two ends of ``second``.
    """

    first: int
    second: int
    flag: int = 0


def crossing_flag(graph: RotationMultigraph, a: int, b: int, clockwise: Sequence[tuple[int, int]]) -> int:
    """Flag realising the clockwise order ``clockwise`` of (edge, endpoint) ends.

    ``clockwise`` lists the four ends around the crossing point, e.g.
    ``[(a, a_end), (b, b_end), (a, a_other), (b, b_other)]``.
    """
    seq = list(clockwise)
    i = next(k for k, (e, w) in enumerate(seq) if e == a and w == graph.edges[a][0])
    seq = seq[i:] + seq[:i]
    if [e for e, _ in seq] != [a, b, a, b]:
        raise OnePlaneError("crossing ends must alternate between the two edges")
    return 0 if seq[1][1] == graph.edges[b][0] else 1


@dataclass(frozen=True)
class OnePlaneDrawing:
    graph: RotationMultigraph
    crossings: tuple[CrossingPair, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "crossings", tuple(self.crossings))

    @cached_property
    def partner(self) -> dict[int, int]:
        p: dict[int, int] = {}
        for c in self.crossings:
            p[c.first] = c.second
            p[c.second] = c.first
        return p

    @cached_property
    def crossing_edges(self) -> frozenset[int]:
        return frozenset(self.partner)

    @cached_property
    def noncrossing_edges(self) -> tuple[int, ...]:
        return tuple(e for e in range(self.graph.m) if e not in self.partner)

    def crossing_of(self, e: int) -> int | None:
        for i, c in enumerate(self.crossings):
            if e in (c.first, c.second):
                return i
        return None


@dataclass(frozen=True)
class Planarization:
    """Planarized drawing plus the bookkeeping needed to undo it.

    ``segments[e]`` lists the planarization edge ids that make up original
    edge ``e`` (in order from ``edges[e][0]``); ``dummy[i]`` is the vertex
    standing for crossing ``i``.
    """

    graph: RotationMultigraph
    original_n: int
    segments: tuple[tuple[int, ...], ...]
    dummy: tuple[int, ...] = field(default=())


def _check_crossings(drawing: OnePlaneDrawing) -> list[str]:
    g = drawing.graph
    problems = []
    used: dict[int, int] = {}
    for i, c in enumerate(drawing.crossings):
        for e in (c.first, c.second):
            if not 0 <= e < g.m:
                problems.append(f"crossing {i} names unknown edge {e}")
                continue
            if e in used:
                problems.append(f"edge {e} in two crossing pairs ({used[e]} and {i})")
            used[e] = i
        if c.first == c.second:
            problems.append(f"crossing {i} pairs edge {c.first} with itself")
        elif 0 <= c.first < g.m and 0 <= c.second < g.m:
            if set(g.edges[c.first]) & set(g.edges[c.second]):
                problems.append(f"crossing {i} pairs adjacent edges {c.first} and {c.second}")
        if c.flag not in (0, 1):
            problems.append(f"crossing {i} has flag {c.flag}")
    return problems


def planarize(drawing: OnePlaneDrawing) -> Planarization:
    """Replace every crossing by a degree-4 dummy vertex.

    Raises:
        InvalidDrawingError: if an edge is in two pairs, or adjacent edges
            are paired.
    """
    problems = _check_crossings(drawing)
    if problems:
        raise InvalidDrawingError("; ".join(problems))
    g = drawing.graph
    edges = list(g.edges)
    rotation = [list(r) for r in g.rotation]
    segments: list[tuple[int, ...]] = [(e,) for e in range(g.m)]
    dummies = []
    for i, c in enumerate(drawing.crossings):
        d = g.n + i
        dummies.append(d)
        halves = {}
        for e in (c.first, c.second):
            x, y = g.edges[e]
            tail = len(edges)
            edges[e] = (x, d)
            edges.append((d, y))
            rot_y = rotation[y]
            rot_y[rot_y.index(e)] = tail
            segments[e] = (e, tail)
            halves[e] = tail
        a, b = c.first, c.second
        if c.flag == 0:
            rotation.append([a, b, halves[a], halves[b]])
        else:
            rotation.append([a, halves[b], halves[a], b])
    pg = RotationMultigraph(g.n + len(drawing.crossings), tuple(edges), tuple(tuple(r) for r in rotation))
    return Planarization(pg, g.n, tuple(segments), tuple(dummies))


def unplanarize(p: Planarization) -> RotationMultigraph:
    """Contract every dummy vertex back into a crossing of two edges."""
    g = p.graph
    m = len(p.segments)
    edges = []
    for segs in p.segments:
        a = g.edges[segs[0]][0]
        b = g.edges[segs[-1]][1]
        edges.append((a, b))
    back = {}
    for e, segs in enumerate(p.segments):
        for s in segs:
            back[s] = e
    rotation = [tuple(back[s] for s in g.rotation[v]) for v in range(p.original_n)]
    assert all(back[s] < m for s in back)
    return RotationMultigraph(p.original_n, tuple(edges), tuple(rotation))


def validate_drawing(drawing: OnePlaneDrawing) -> Verdict:
    """Valid iff the planarization exists and is a connected sphere embedding."""
    v = validate(drawing.graph)
    if not v.ok:
        return v
    problems = _check_crossings(drawing)
    if problems:
        return Verdict(tuple(problems))
    p = planarize(drawing)
    try:
        census = trace_faces(p.graph)
    except DisconnectedError:
        return Verdict(("planarization is disconnected",))
    if sum(census.face_lengths) != 2 * p.graph.m:
        return Verdict(("face census does not cover every dart once",))
    if census.genus != 0:
        return Verdict((f"not a sphere drawing (genus {census.genus})",))
    return Verdict()


def is_plane_subset(drawing: OnePlaneDrawing, kept: Iterable[int]) -> bool:
    """True iff no crossing pair has both members in ``kept``."""
    kept = set(kept)
    bad = [e for e in kept if not 0 <= e < drawing.graph.m]
    if bad:
        raise OnePlaneError(f"unknown edge id {bad[0]}")
    return not any(c.first in kept and c.second in kept for c in drawing.crossings)


def relabel_check(a: RotationMultigraph, b: RotationMultigraph, edge_map: Mapping[int, int]) -> bool:
    """True iff ``edge_map`` carries ``a`` onto ``b`` with identical vertex ids and rotations."""
    if a.n != b.n or a.m != b.m:
        return False
    for e, f in edge_map.items():
        if set(a.edges[e]) != set(b.edges[f]):
            return False
    for v in range(a.n):
        ra = [edge_map[e] for e in a.rotation[v]]
        rb = list(b.rotation[v])
        if len(ra) != len(rb):
            return False
        if ra and rb != ra and not any(rb == ra[i:] + ra[:i] for i in range(len(ra))):
            return False
    return True
