"""Inflation, gadget attachment, crossing operations and the instance families.

Id conventions used throughout:

* In an inflation, the inter-cycle edge for base edge ``e`` keeps id ``e``,
  so base edge ids double as ids of the "long" edges of every later stage.
* The inflated cycle of base vertex ``w`` lists one vertex per edge end, in
  the clockwise rotation order of ``w``; cycle edges get ids after the
  inter-cycle edges, and gadget interiors come after that.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterable, Sequence

from . import connalg
from .core import (
    CrossingPair,
    OnePlaneDrawing,
    OnePlaneError,
    RotationMultigraph,
    components as _components,
    crossing_flag,
    genus,
    validate,
)
from .gadgets import Gadget, gadget
from .library import bundle, bundle_copies, prism


@dataclass(frozen=True)
class InflationMap:
    """How an inflated drawing sits over its base.

    ``cycles[w][i]`` is the cycle vertex for the ``i``-th edge end in the
    rotation of ``w``; ``cycle_edges[w][i]`` joins ``cycles[w][i]`` and
    ``cycles[w][i+1]``; base edge ``e`` maps to drawing edge ``edge_map[e]``.
    """

    base: RotationMultigraph
    cycles: tuple[tuple[int, ...], ...]
    cycle_edges: tuple[tuple[int, ...], ...]
    edge_map: tuple[int, ...]

    @cached_property
    def owner(self) -> dict[int, int]:
        """Cycle vertex -> base vertex."""
        return {x: w for w, cyc in enumerate(self.cycles) for x in cyc}

    def end_vertex(self, w: int, e: int) -> int:
        """Cycle vertex of ``w`` where base edge ``e`` is attached before any crossing operation."""
        return self.cycles[w][self.base.position[w][e]]

    @cached_property
    def inter_edges(self) -> frozenset[int]:
        return frozenset(self.edge_map)

    def clusters(self, drawing: OnePlaneDrawing) -> list[list[int]]:
        """Vertex set per base vertex: its cycle plus any attached gadget interior."""
        g = drawing.graph
        inter = self.inter_edges
        comps = _components(g.n, [g.edges[e] for e in range(g.m) if e not in inter])
        where = {}
        for i, c in enumerate(comps):
            for v in c:
                where[v] = i
        out = []
        for w, cyc in enumerate(self.cycles):
            out.append(comps[where[cyc[0]]])
        return out

    def contract(self, drawing: OnePlaneDrawing) -> list[tuple[int, int]]:
        """Base edge list recovered by contracting every cluster of ``drawing``."""
        g = drawing.graph
        label = {}
        for w, members in enumerate(self.clusters(drawing)):
            for v in members:
                label[v] = w
        return [(label[g.edges[f][0]], label[g.edges[f][1]]) for f in self.edge_map]


def _as_drawing(base) -> OnePlaneDrawing:
    if isinstance(base, OnePlaneDrawing):
        return base
    if isinstance(base, RotationMultigraph):
        return OnePlaneDrawing(base)
    raise TypeError("expected a RotationMultigraph or OnePlaneDrawing")


def inflate(base) -> tuple[OnePlaneDrawing, InflationMap]:
    """Canonical inflation: every vertex becomes a cycle, in rotation order.

    Works for any rotation system; when ``base`` is a plane graph or a
    1-plane drawing the output is again one (crossings are inherited with
    unchanged flags, since every edge keeps its endpoint order).

    Raises:
        OnePlaneError: if some vertex has degree below 3.
    """
    d = _as_drawing(base)
    g = d.graph
    low = [v for v in range(g.n) if g.degree(v) < 3]
    if low:
        raise OnePlaneError(f"inflation needs minimum degree 3; vertex {low[0]} has degree {g.degree(low[0])}")
    cycles = []
    nxt = 0
    for v in range(g.n):
        cycles.append(tuple(range(nxt, nxt + g.degree(v))))
        nxt += g.degree(v)
    edges: list[tuple[int, int]] = []
    for e, (a, b) in enumerate(g.edges):
        edges.append((cycles[a][g.position[a][e]], cycles[b][g.position[b][e]]))
    cycle_edges = []
    for v in range(g.n):
        cyc = cycles[v]
        ids = []
        for i in range(len(cyc)):
            ids.append(len(edges))
            edges.append((cyc[i], cyc[(i + 1) % len(cyc)]))
        cycle_edges.append(tuple(ids))
    rotation: list[tuple[int, ...]] = [()] * nxt
    for v in range(g.n):
        cyc, ce = cycles[v], cycle_edges[v]
        for i, e in enumerate(g.rotation[v]):
            rotation[cyc[i]] = (e, ce[i], ce[i - 1])
    out = RotationMultigraph(nxt, tuple(edges), tuple(rotation))
    imap = InflationMap(g, tuple(cycles), tuple(cycle_edges), tuple(range(g.m)))
    return OnePlaneDrawing(out, d.crossings), imap


def attach_gadgets(inflated: OnePlaneDrawing, imap: InflationMap, gadgets: dict[int, Gadget] | None = None) -> OnePlaneDrawing:
    """Glue a ``k``-gadget into every inflated ``k``-cycle with ``k >= 4``.

    The gadget's outer cycle is identified with the inflated cycle, and its
    interior goes on the side away from the inter-cycle edges.  Triangles
    are left alone.

    Raises:
        OnePlaneError: for an inflated cycle longer than 7.
    """
    g = inflated.graph
    edges = list(g.edges)
    rotation = [list(r) for r in g.rotation]
    crossings = list(inflated.crossings)
    n = g.n
    for w, cyc in enumerate(imap.cycles):
        k = len(cyc)
        if k <= 3:
            continue
        if k > 7:
            raise OnePlaneError(f"no gadget for an inflated cycle of length {k}")
        gad = (gadgets or {}).get(k) or gadget(k)
        gg = gad.drawing.graph
        vmap: dict[int, int] = {}
        for i, x in enumerate(gad.outer_cycle):
            vmap[x] = cyc[i]
        for x in range(gg.n):
            if x not in vmap:
                vmap[x] = n
                rotation.append([])
                n += 1
        emap: dict[int, int] = {}
        for i, ge in enumerate(gad.cycle_edges):
            emap[ge] = imap.cycle_edges[w][i]
        for ge in gad.interior_edges():
            a, b = gg.edges[ge]
            emap[ge] = len(edges)
            edges.append((vmap[a], vmap[b]))
        for x in range(gg.n):
            v = vmap[x]
            if x in gad.outer_cycle:
                i = gad.outer_cycle.index(x)
                rot = rotation[v]
                j = rot.index(imap.cycle_edges[w][i])
                rotation[v] = rot[: j + 1] + [emap[e] for e in gad.interior_at(i)] + rot[j + 1 :]
            else:
                rotation[v] = [emap[e] for e in gg.rotation[x]]
        for c in gad.drawing.crossings:
            crossings.append(CrossingPair(emap[c.first], emap[c.second], c.flag))
    out = RotationMultigraph(n, tuple(edges), tuple(tuple(r) for r in rotation))
    return OnePlaneDrawing(out, tuple(crossings))


@dataclass(frozen=True)
class PlanItem:
    """An even closed walk (cycle) or even path in the base, as vertices and edges.

    For a cycle ``len(vertices) == len(edges)`` and ``edges[i]`` joins
    ``vertices[i]`` and ``vertices[i+1]`` (cyclically); for a path there is
    one more vertex than edges.  The middle vertices are ``vertices[1]``,
    ``vertices[3]``, ... and pair up ``edges[0], edges[1]``, then
    ``edges[2], edges[3]``, and so on.
    """

    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    closed: bool

    def pairs(self) -> list[tuple[int, int, int]]:
        return [(self.vertices[2 * j + 1], self.edges[2 * j], self.edges[2 * j + 1]) for j in range(len(self.edges) // 2)]


@dataclass(frozen=True)
class CrossingPlan:
    items: tuple[PlanItem, ...] = ()

    def pairs(self) -> list[tuple[int, int, int]]:
        """``(middle vertex, e, f)`` for every crossing the plan creates."""
        return [p for item in self.items for p in item.pairs()]

    @property
    def edges(self) -> list[int]:
        return [e for item in self.items for e in item.edges]

    def check(self, base: RotationMultigraph) -> list[str]:
        problems = []
        seen: dict[int, int] = {}
        for i, item in enumerate(self.items):
            L = len(item.edges)
            if L == 0 or L % 2:
                problems.append(f"item {i} has odd or zero length {L}")
            expected_v = L if item.closed else L + 1
            if len(item.vertices) != expected_v:
                problems.append(f"item {i} lists {len(item.vertices)} vertices for {L} edges")
                continue
            for j, e in enumerate(item.edges):
                if not 0 <= e < base.m:
                    problems.append(f"item {i} uses unknown edge {e}")
                    continue
                a, b = item.vertices[j], item.vertices[(j + 1) % len(item.vertices)]
                if sorted(base.edges[e]) != sorted((a, b)):
                    problems.append(f"item {i}: edge {e} does not join {a} and {b}")
                if e in seen:
                    problems.append(f"edge {e} used by items {seen[e]} and {i}")
                seen[e] = i
            if not item.closed and len(set(item.vertices)) != len(item.vertices):
                problems.append(f"item {i} is not a path")
            if item.closed and len(set(item.vertices)) != len(item.vertices):
                problems.append(f"item {i} is not a cycle")
            if problems:
                continue
            for mid, e, f in item.pairs():
                if not base.consecutive(mid, e, f):
                    problems.append(f"edges {e} and {f} are not consecutive at {mid}")
        return problems


def walk_from_edges(base: RotationMultigraph, edge_seq: Sequence[int], closed: bool, start: int | None = None) -> PlanItem:
    """Build a plan item from edges listed in walking order.

    ``start`` fixes the first vertex of a path (needed when the first edge
    alone does not determine it).
    """
    edge_seq = list(edge_seq)
    if not edge_seq:
        raise OnePlaneError("empty plan item")
    if start is None:
        a, b = base.edges[edge_seq[0]]
        if len(edge_seq) > 1:
            nxt = set(base.edges[edge_seq[1]])
            start = a if b in nxt else b
            if len(edge_seq) == 2 and closed:
                start = min(a, b)
        else:
            start = a
    verts = [start]
    for e in edge_seq:
        verts.append(base.other(e, verts[-1]))
    if closed:
        if verts[-1] != verts[0]:
            raise OnePlaneError("edges do not close up into a cycle")
        verts.pop()
    return PlanItem(tuple(verts), tuple(edge_seq), closed)


def canonical_cycle(base: RotationMultigraph, edge_set: Iterable[int]) -> PlanItem:
    """Cycle item starting at its smallest vertex, leaving along the edge earlier in that vertex's rotation."""
    es = list(edge_set)
    inc: dict[int, list[int]] = {}
    for e in es:
        for v in base.edges[e]:
            inc.setdefault(v, []).append(e)
    if any(len(x) != 2 for x in inc.values()):
        raise OnePlaneError("edge set is not a cycle")
    v1 = min(inc)
    first = min(inc[v1], key=lambda e: base.position[v1][e])
    seq = [first]
    v = base.other(first, v1)
    while v != v1:
        e = next(x for x in inc[v] if x != seq[-1]) if len(set(inc[v])) > 1 else inc[v][0]
        seq.append(e)
        v = base.other(e, v)
    if len(seq) == 1:
        raise OnePlaneError("a cycle needs at least two edges")
    return walk_from_edges(base, seq, True, start=v1)


def crossing_operation(attached: OnePlaneDrawing, imap: InflationMap, plan: CrossingPlan) -> OnePlaneDrawing:
    """Swap the near endpoints of each planned consecutive pair and record the crossing.

    Raises:
        OnePlaneError: if the plan is invalid for the base graph or touches
            an edge that is already crossed.
    """
    problems = plan.check(imap.base)
    if problems:
        raise OnePlaneError("invalid crossing plan: " + "; ".join(problems))
    g = attached.graph
    partner = attached.partner
    edges = [list(e) for e in g.edges]
    rotation = [list(r) for r in g.rotation]
    crossings = list(attached.crossings)
    base = imap.base
    for mid, e, f in plan.pairs():
        de, df = imap.edge_map[e], imap.edge_map[f]
        for x in (de, df):
            if x in partner:
                raise OnePlaneError(f"edge {x} is already crossed")
        cyc = set(imap.cycles[mid])

        def near(x: int) -> int:
            ends = [i for i in (0, 1) if edges[x][i] in cyc]
            if len(ends) != 1:
                raise OnePlaneError(f"edge {x} does not leave the inflated cycle of {mid} exactly once")
            return ends[0]

        ie, jf = near(de), near(df)
        we, wf = edges[de][ie], edges[df][jf]
        far_e, far_f = edges[de][1 - ie], edges[df][1 - jf]
        edges[de][ie], edges[df][jf] = wf, we
        rotation[we][rotation[we].index(de)] = df
        rotation[wf][rotation[wf].index(df)] = de
        if base.successor(mid, e) == f:
            order = [(de, far_e), (df, far_f), (de, wf), (df, we)]
        elif base.successor(mid, f) == e:
            order = [(df, far_f), (de, far_e), (df, we), (de, wf)]
        else:
            raise OnePlaneError(f"edges {e} and {f} are not consecutive at {mid}")
        tmp = RotationMultigraph(g.n, tuple(tuple(x) for x in edges), ())
        crossings.append(CrossingPair(de, df, crossing_flag(tmp, de, df, order)))
    out = RotationMultigraph(g.n, tuple(tuple(x) for x in edges), tuple(tuple(r) for r in rotation))
    return OnePlaneDrawing(out, tuple(crossings))


@dataclass(frozen=True)
class Construction:
    """A generated instance with every intermediate stage kept for checking."""

    family: str
    params: dict[str, Any]
    base: RotationMultigraph
    inflated: OnePlaneDrawing
    imap: InflationMap
    attached: OnePlaneDrawing
    plan: CrossingPlan
    drawing: OnePlaneDrawing
    extras: dict[str, Any] = field(default_factory=dict)

    def clusters(self) -> list[list[int]]:
        return self.imap.clusters(self.drawing)


def build(family: str, params: dict[str, Any], base: RotationMultigraph, plan: CrossingPlan, **extras) -> Construction:
    inflated, imap = inflate(base)
    attached = attach_gadgets(inflated, imap)
    drawing = crossing_operation(attached, imap, plan)
    return Construction(family, dict(params), base, inflated, imap, attached, plan, drawing, dict(extras))


def _require_cubic_polyhedral(base: RotationMultigraph, min_order: int = 0) -> None:
    v = validate(base)
    if not v.ok:
        raise OnePlaneError("invalid base: " + "; ".join(v.violations))
    if not base.is_regular(3):
        raise OnePlaneError("base must be cubic")
    if base.n < min_order:
        raise OnePlaneError(f"base must have order at least {min_order}, got {base.n}")
    if not connalg.is_connected(base) or genus(base) != 0:
        raise OnePlaneError("base must be a connected plane graph")
    if not connalg.edge_connectivity(base, at_least=3):
        raise OnePlaneError("base must be 3-edge-connected")


def construct_theorem2(k: int) -> Construction:
    """Prism over ``C_2k``, inflated, with the inner cycle and the paths ``v_i u_i u_{i+1}`` crossed."""
    if k < 2:
        raise OnePlaneError("theorem-2 family needs k >= 2")
    n = 2 * k
    base = prism(n)
    outer = list(range(n))
    inner = list(range(n, 2 * n))
    spoke = list(range(2 * n, 3 * n))
    items = [canonical_cycle(base, inner)]
    for i in range(n):
        items.append(walk_from_edges(base, [spoke[i], outer[i]], False, start=n + i))
    return build("thm2", {"k": k}, base, CrossingPlan(tuple(items)))


def gen_theorem2(k: int) -> OnePlaneDrawing:
    return construct_theorem2(k).drawing


def construct_theorem2_general(base: RotationMultigraph) -> Construction:
    """Cross every length-2 path of a path partition of a cubic polyhedral base."""
    _require_cubic_polyhedral(base, min_order=8)
    part = connalg.p2_partition(base)
    items = []
    for e, f, mid in part.paths:
        x, y = base.other(e, mid), base.other(f, mid)
        if x == y:
            items.append(PlanItem((x, mid), (e, f), True))
        else:
            items.append(PlanItem((x, mid, y), (e, f), False))
    return build("thm2gen", {"n": base.n}, base, CrossingPlan(tuple(items)), leftover=part.leftover)


def gen_theorem2_general(base: RotationMultigraph) -> OnePlaneDrawing:
    return construct_theorem2_general(base).drawing


def construct_theorem3(base: RotationMultigraph, seed: int | None = None, coloring_budget: int = 10**6) -> Construction:
    """Double a Tait colour class, inflate with 4-gadgets and cross bigons and 2-factor cycles."""
    _require_cubic_polyhedral(base)
    col = connalg.tait_coloring(base, budget=coloring_budget, seed=seed)
    matching = sorted(col.color_class(1))
    mult = [2 if e in set(matching) else 1 for e in range(base.m)]
    gm = bundle(base, mult)
    copies = bundle_copies(base, mult)
    items = []
    for e in matching:
        items.append(canonical_cycle(gm, copies[e]))
    factor = [copies[e][0] for e in range(base.m) if mult[e] == 1]
    for comp in connalg.components((gm.n, gm.edges), factor):
        cs = set(comp)
        cyc = [x for x in factor if gm.edges[x][0] in cs]
        items.append(canonical_cycle(gm, cyc))
    return build(
        "thm3",
        {"n": base.n, "seed": seed},
        gm,
        CrossingPlan(tuple(items)),
        cubic_base=base,
        coloring=col,
        matching=tuple(matching),
        copies=tuple(tuple(c) for c in copies),
    )


def gen_theorem3(base: RotationMultigraph, seed: int | None = None) -> OnePlaneDrawing:
    return construct_theorem3(base, seed).drawing


def tripled_cycle(n: int) -> tuple[RotationMultigraph, list[list[int]]]:
    """``I_n``: the ``n``-cycle with every edge tripled; copy 0 of every bundle bounds one face."""
    cyc = RotationMultigraph(
        n,
        tuple((i, (i + 1) % n) for i in range(n)),
        tuple(((i - 1) % n, i) for i in range(n)),
    )
    return bundle(cyc, [3] * n), bundle_copies(cyc, [3] * n)


def construct_theorem4(k: int) -> Construction:
    """``I_2k`` inflated with 6-gadgets; bigons on copies 1, 2 and the cycle of copies 0 are crossed."""
    if k < 2:
        raise OnePlaneError("theorem-4 family needs k >= 2")
    base, copies = tripled_cycle(2 * k)
    items = [canonical_cycle(base, [c[1], c[2]]) for c in copies]
    items.append(canonical_cycle(base, [c[0] for c in copies]))
    return build("thm4", {"k": k}, base, CrossingPlan(tuple(items)), copies=tuple(tuple(c) for c in copies))


def gen_theorem4(k: int) -> OnePlaneDrawing:
    return construct_theorem4(k).drawing


def sevenreg_base(k: int) -> tuple[RotationMultigraph, dict[str, list[list[int]]]]:
    """Prism over ``C_2k`` with outer and inner cycle edges doubled and spokes tripled."""
    n = 2 * k
    p = prism(n)
    mult = [2] * (2 * n) + [3] * n
    copies = bundle_copies(p, mult)
    return bundle(p, mult), {"outer": copies[:n], "inner": copies[n : 2 * n], "spoke": copies[2 * n :]}


def construct_sevenreg(k: int) -> Construction:
    """7-regular family with 7-gadgets.

    The stored plan crosses every base edge: paths ``v_i s u_i a u_{i+1}``
    through the spoke copy and outer copy next to each other at ``u_i``, the
    cycle through the remaining outer copies, and bigons on the other spoke
    copies and on the inner bundles.  That is ``7k`` crossing pairs for
    ``4k`` clusters, so a plane subgraph keeps at most ``7k`` inter-cluster
    edges while 4-connectivity would need ``8k``.
    """
    if k < 2:
        raise OnePlaneError("seven-regular family needs k >= 2")
    base, c = sevenreg_base(k)
    n = 2 * k
    items = []
    for i in range(n):
        items.append(walk_from_edges(base, [c["spoke"][i][0], c["outer"][i][1]], False, start=n + i))
    items.append(canonical_cycle(base, [c["outer"][i][0] for i in range(n)]))
    for i in range(n):
        items.append(canonical_cycle(base, c["spoke"][i][1:]))
        items.append(canonical_cycle(base, c["inner"][i]))
    return build("seven", {"k": k}, base, CrossingPlan(tuple(items)), copies=c)


def gen_sevenreg(k: int) -> OnePlaneDrawing:
    return construct_sevenreg(k).drawing


def gadget_only(k: int) -> OnePlaneDrawing:
    return gadget(k).drawing
