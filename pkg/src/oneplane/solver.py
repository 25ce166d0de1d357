"""Search for spanning plane subgraphs of a 1-plane drawing.

Every search works on *normalized* subgraphs.  These keep all non-crossing
edges and exactly one edge of every crossing pair.  Adding an edge never
hurts connectivity, so some optimum is always normalized.  A subgraph is
therefore a 0/1 choice per crossing pair.

The exact search groups vertices into *clusters*, the components of the
non-crossing subgraph.  In generated instances these are the gadgets and
inflated triangles.  Pairs whose two edges join different cluster pairs are
decided first, under cluster-level bounds.  Pairs that cannot change the
cluster graph are decided afterwards, under vertex-level checks.
"""

from __future__ import annotations

import json
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import asdict, dataclass, field
from itertools import product
from typing import Iterable, Literal, Sequence

from . import connalg
from .core import OnePlaneDrawing, components as _components, is_plane_subset

Status = Literal["optimal", "feasible", "proven_impossible", "budget_exhausted"]
STATUSES = ("optimal", "feasible", "proven_impossible", "budget_exhausted")
DEFAULT_NODES = 10**7
DEFAULT_SECONDS = 60.0


def default_seconds() -> float:
    """Wall-clock budget, overridable through ``ONEPLANE_BUDGET_SECS``."""
    raw = os.environ.get("ONEPLANE_BUDGET_SECS")
    if raw:
        try:
            return float(raw)
        except ValueError:
            pass
    return DEFAULT_SECONDS


@dataclass
class Budget:
    nodes: int = DEFAULT_NODES
    seconds: float | None = None

    def __post_init__(self) -> None:
        if self.seconds is None:
            self.seconds = default_seconds()


class _OutOfBudget(Exception):
    pass


class _Found(Exception):
    def __init__(self, kept: frozenset[int]):
        self.kept = kept


class _Meter:
    def __init__(self, budget: Budget):
        self.budget = budget
        self.nodes = 0
        self.start = time.perf_counter()

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.nodes:
            raise _OutOfBudget
        if self.nodes % 64 == 0 and time.perf_counter() - self.start > self.budget.seconds:
            raise _OutOfBudget

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self.start


@dataclass(frozen=True)
class SolveReport:
    """Outcome of a search; ``kept`` is a plane edge set with the stated statistics."""

    objective: str
    status: Status
    kept: tuple[int, ...]
    components: int
    kappa: int
    nodes_explored: int
    wall_time: float
    value: int | bool | None = None
    notes: tuple[str, ...] = ()
    history: tuple[int, ...] = field(default=(), compare=False)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["kept"] = sorted(self.kept)
        d["notes"] = list(self.notes)
        d["history"] = list(self.history)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> SolveReport:
        return cls(
            objective=d["objective"],
            status=d["status"],
            kept=tuple(d["kept"]),
            components=d["components"],
            kappa=d["kappa"],
            nodes_explored=d["nodes_explored"],
            wall_time=d["wall_time"],
            value=d.get("value"),
            notes=tuple(d.get("notes", ())),
            history=tuple(d.get("history", ())),
        )


def subgraph_stats(drawing: OnePlaneDrawing, kept: Iterable[int]) -> tuple[int, int]:
    """(components, vertex connectivity) of the spanning subgraph on ``kept``."""
    g = drawing.graph
    edges = [g.edges[e] for e in sorted(set(kept))]
    comps = len(_components(g.n, edges))
    if comps > 1 or g.n < 2:
        return comps, 0
    return comps, connalg.vertex_connectivity((g.n, edges))


def _report(drawing, objective, status, kept, meter, value=None, notes=(), history=()) -> SolveReport:
    kept = tuple(sorted(kept))
    comps, kappa = subgraph_stats(drawing, kept)
    return SolveReport(objective, status, kept, comps, kappa, meter.nodes, round(meter.elapsed, 6), value, tuple(notes), tuple(history))


class _Instance:
    """Precomputed structure shared by all searches on one drawing."""

    def __init__(self, drawing: OnePlaneDrawing):
        self.drawing = drawing
        g = drawing.graph
        self.g = g
        self.n = g.n
        self.pairs = [(c.first, c.second) for c in drawing.crossings]
        self.fixed = list(drawing.noncrossing_edges)
        comps = _components(g.n, [g.edges[e] for e in self.fixed])
        self.cluster_of = [0] * g.n
        for i, c in enumerate(comps):
            for v in c:
                self.cluster_of[v] = i
        self.cluster_size = [len(c) for c in comps]
        self.n_clusters = len(comps)
        self.ends = [tuple(sorted((self.cluster_of[a], self.cluster_of[b]))) for a, b in g.edges]
        self.kind = []
        for a, b in self.pairs:
            ea, eb = self.ends[a], self.ends[b]
            internal_a, internal_b = ea[0] == ea[1], eb[0] == eb[1]
            if internal_a and internal_b:
                self.kind.append("internal")
            elif ea == eb:
                self.kind.append("equivalent")
            else:
                self.kind.append("distinguishing")

    def kept_set(self, choice: Sequence[int | None], optimistic: bool = False) -> list[int]:
        out = list(self.fixed)
        for (a, b), c in zip(self.pairs, choice):
            if c is None:
                if optimistic:
                    out += [a, b]
            else:
                out.append(b if c else a)
        return out

    def n_components(self, kept: Iterable[int]) -> int:
        return len(_components(self.n, [self.g.edges[e] for e in kept]))

    def default_choice(self) -> list[int]:
        return [0] * len(self.pairs)


# ----------------------------------------------------------------------------
# exchange heuristic


def exchange_heuristic(
    drawing: OnePlaneDrawing,
    seed: int = 0,
    budget: Budget | None = None,
    restarts: int = 16,
) -> SolveReport:
    """Greedy component merging with the two exchange moves.

    Starting from all non-crossing edges, repeatedly take an unkept edge
    ``uv`` between two components.  It is added if its crossing partner is
    not kept.  If the partner ``xy`` is kept but is not a bridge, the two
    are swapped.  Each accepted move lowers the component count by one.
    When no move applies, the search restarts with a freshly shuffled scan
    order and the best result is kept.
    """
    meter = _Meter(budget or Budget())
    g = drawing.graph
    partner = drawing.partner
    rng = random.Random(seed)
    best_kept: set[int] | None = None
    best_comp = None
    best_hist: list[int] = []
    try:
        for attempt in range(max(1, restarts)):
            kept = set(drawing.noncrossing_edges)
            order = list(range(g.m))
            if attempt:
                rng.shuffle(order)
            history = [len(_components(g.n, [g.edges[e] for e in kept]))]
            while history[-1] > 1:
                comps = _components(g.n, [g.edges[e] for e in kept])
                label = {}
                for i, c in enumerate(comps):
                    for v in c:
                        label[v] = i
                bridges = None
                moved = False
                for e in order:
                    meter.tick()
                    if e in kept:
                        continue
                    a, b = g.edges[e]
                    if label[a] == label[b]:
                        continue
                    p = partner.get(e)
                    if p is None or p not in kept:
                        kept.add(e)
                        moved = True
                        break
                    if bridges is None:
                        bridges = connalg.cut_edges((g.n, g.edges), kept=kept)
                    if p not in bridges:
                        kept.discard(p)
                        kept.add(e)
                        moved = True
                        break
                if not moved:
                    break
                history.append(len(_components(g.n, [g.edges[x] for x in kept])))
            if best_comp is None or history[-1] < best_comp:
                best_kept, best_comp, best_hist = set(kept), history[-1], history
            if best_comp == 1:
                break
    except _OutOfBudget:
        pass
    if best_kept is None:
        best_kept = set(drawing.noncrossing_edges)
        best_hist = [len(_components(g.n, [g.edges[e] for e in best_kept]))]
    status: Status = "feasible" if best_hist[-1] == 1 else "budget_exhausted"
    return _report(drawing, "heuristic", status, best_kept, meter, value=best_hist[-1], history=best_hist)


# ----------------------------------------------------------------------------
# exact search: minimum number of components


def _min_components(inst: _Instance, meter: _Meter, incumbent: tuple[int, list[int]], stop_at: int = 1):
    """Branch and bound; returns (best value, best choice vector, proven)."""
    P = len(inst.pairs)
    g = inst.g
    best_val, best_choice = incumbent
    size0 = inst.cluster_size
    key = []
    for p, (a, b) in enumerate(inst.pairs):
        sizes = [min(size0[x] for x in inst.ends[e]) if inst.ends[e][0] != inst.ends[e][1] else 10**9 for e in (a, b)]
        key.append((min(sizes), p))
    order = [p for _, p in sorted(key)]
    choice: list[int | None] = [None] * P
    state = {"best": best_val, "choice": list(best_choice)}

    def bound(depth_left: int) -> tuple[int, list[list[int]]]:
        cur = inst.kept_set(choice)
        comps = _components(inst.n, [g.edges[e] for e in cur])
        opt = inst.n_components(inst.kept_set(choice, optimistic=True))
        return max(opt, len(comps) - depth_left), comps

    root_lb, _ = bound(P)

    def rec(i: int) -> None:
        meter.tick()
        lb, comps = bound(P - i)
        if lb >= state["best"]:
            return
        if i == P:
            val = len(comps)
            if val < state["best"]:
                state["best"], state["choice"] = val, [int(c) for c in choice]
            return
        p = order[i]
        label = {}
        for j, c in enumerate(comps):
            for v in c:
                label[v] = j

        def merge_key(opt: int) -> tuple:
            e = inst.pairs[p][opt]
            x, y = g.edges[e]
            if label[x] == label[y]:
                return (1, 0, opt)
            return (0, len(comps[label[x]]) + len(comps[label[y]]), opt)

        for opt in sorted((0, 1), key=merge_key):
            choice[p] = opt
            rec(i + 1)
            choice[p] = None
            if state["best"] <= max(root_lb, stop_at):
                return

    rec(0)
    return state["best"], state["choice"], root_lb


def _incumbent(inst: _Instance, drawing, seed: int, budget: Budget) -> tuple[int, list[int]]:
    h = exchange_heuristic(drawing, seed=seed, budget=Budget(min(budget.nodes, 2 * 10**6), min(budget.seconds, 20.0)))
    choice = []
    kept = set(h.kept)
    for a, b in inst.pairs:
        choice.append(1 if b in kept and a not in kept else 0)
    val = inst.n_components(inst.kept_set(choice))
    return val, choice


def min_components(drawing: OnePlaneDrawing, budget: Budget | None = None, seed: int = 0) -> SolveReport:
    budget = budget or Budget()
    meter = _Meter(budget)
    inst = _Instance(drawing)
    inc = _incumbent(inst, drawing, seed, budget)
    try:
        val, choice, lb = _min_components(inst, meter, inc)
        status: Status = "optimal"
        notes = [f"lower bound at root {lb}"]
    except _OutOfBudget:
        val, choice = inc
        status = "budget_exhausted"
        notes = ["search budget exhausted; value is an upper bound"]
    return _report(drawing, "min_components", status, inst.kept_set(choice), meter, value=val, notes=notes)


# ----------------------------------------------------------------------------
# exact search: does an l-connected spanning plane subgraph exist?


class _ExistsSearch:
    """Decision search for an ``l``-connected normalized subgraph."""

    def __init__(self, drawing: OnePlaneDrawing, l: int):
        self.inst = _Instance(drawing)
        self.l = l
        inst = self.inst
        self.D = [p for p, k in enumerate(inst.kind) if k == "distinguishing"]
        self.rest = [p for p, k in enumerate(inst.kind) if k == "equivalent"] + [
            p for p, k in enumerate(inst.kind) if k == "internal"
        ]
        # cluster edges that are present whatever the choice
        self.base_cluster_edges: list[tuple[int, int]] = []
        for p, k in enumerate(inst.kind):
            if k == "equivalent":
                self.base_cluster_edges.append(inst.ends[inst.pairs[p][0]])
        self.D.sort(key=lambda p: (min(min(inst.cluster_size[c] for c in inst.ends[e]) for e in inst.pairs[p]), p))
        self.vertex_prune_each_node = l <= 2 or inst.n <= 80

    # -- cluster level -------------------------------------------------------
    def _cluster_ok(self, choice) -> bool:
        inst, l = self.inst, self.l
        N = inst.n_clusters
        if N == 1:
            return True
        ub = [0] * N
        edges = list(self.base_cluster_edges)
        for c1, c2 in self.base_cluster_edges:
            ub[c1] += 1
            ub[c2] += 1
        for p in self.D:
            a, b = inst.pairs[p]
            opts = [inst.ends[a], inst.ends[b]] if choice[p] is None else [inst.ends[inst.pairs[p][choice[p]]]]
            touched = set()
            for ends in opts:
                if ends[0] != ends[1]:
                    edges.append(ends)
                    touched.update(ends)
            for c in touched:
                ub[c] += 1
        if min(ub) < l:
            return False
        return bool(connalg.edge_connectivity((N, edges), at_least=l))

    # -- vertex level --------------------------------------------------------
    def _vertex_ok(self, choice, exact: bool = False) -> bool:
        inst, l = self.inst, self.l
        kept = inst.kept_set(choice, optimistic=not exact)
        g = inst.g
        deg = [0] * inst.n
        simple = set()
        for e in kept:
            a, b = g.edges[e]
            key = (min(a, b), max(a, b))
            if key not in simple:
                simple.add(key)
                deg[a] += 1
                deg[b] += 1
        if min(deg) < l:
            return False
        return bool(connalg.vertex_connectivity((inst.n, sorted(simple)), at_least=l))

    def run(self, meter: _Meter, prefix: dict[int, int] | None = None) -> None:
        """Raises :class:`_Found` on success; returns after exhausting the space."""
        inst = self.inst
        if inst.n <= self.l:
            return
        choice: list[int | None] = [None] * len(inst.pairs)
        for p, c in (prefix or {}).items():
            choice[p] = c
        D = [p for p in self.D if choice[p] is None]
        rest = self.rest

        def phase2(j: int) -> None:
            meter.tick()
            if j == len(rest):
                if self._vertex_ok(choice, exact=True):
                    raise _Found(frozenset(inst.kept_set(choice)))
                return
            if j == 0 or self.vertex_prune_each_node:
                if not self._vertex_ok(choice):
                    return
            p = rest[j]
            for opt in (0, 1):
                choice[p] = opt
                phase2(j + 1)
            choice[p] = None

        def phase1(i: int) -> None:
            meter.tick()
            if not self._cluster_ok(choice):
                return
            if i == len(D):
                phase2(0)
                return
            if self.vertex_prune_each_node and not self._vertex_ok(choice):
                return
            p = D[i]
            for opt in (0, 1):
                choice[p] = opt
                phase1(i + 1)
            choice[p] = None

        old = sys.getrecursionlimit()
        sys.setrecursionlimit(max(old, 4 * len(inst.pairs) + 1000))
        try:
            phase1(0)
        finally:
            sys.setrecursionlimit(old)

    def prefixes(self, depth: int) -> list[dict[int, int]]:
        head = self.D[:depth]
        return [dict(zip(head, bits)) for bits in product((0, 1), repeat=len(head))]


def _exists_worker(args):
    drawing, l, prefix, budget = args
    search = _ExistsSearch(drawing, l)
    meter = _Meter(budget)
    try:
        search.run(meter, prefix)
    except _Found as f:
        return "found", sorted(f.kept), meter.nodes
    except _OutOfBudget:
        return "budget", None, meter.nodes
    return "none", None, meter.nodes


def exists_l_connected(
    drawing: OnePlaneDrawing,
    l: int,
    budget: Budget | None = None,
    workers: int = 1,
    seed: int = 0,
) -> SolveReport:
    """Decide whether some spanning plane subgraph is ``l``-connected.

    With ``workers > 1`` the first few cluster-level decisions are split
    across processes; the answer is the same, only the reported witness
    may differ.
    """
    budget = budget or Budget()
    objective = f"exists_{l}_connected"
    if l <= 1:
        r = min_components(drawing, budget, seed=seed)
        ok = r.value == 1
        status: Status = "feasible" if ok else ("proven_impossible" if r.status == "optimal" else "budget_exhausted")
        return SolveReport(objective, status, r.kept, r.components, r.kappa, r.nodes_explored, r.wall_time, ok, r.notes)
    meter = _Meter(budget)
    search = _ExistsSearch(drawing, l)
    inst = search.inst
    fallback = inst.kept_set(inst.default_choice())
    if workers <= 1:
        try:
            search.run(meter)
        except _Found as f:
            return _report(drawing, objective, "feasible", f.kept, meter, value=True)
        except _OutOfBudget:
            return _report(drawing, objective, "budget_exhausted", fallback, meter, value=None)
        return _report(drawing, objective, "proven_impossible", fallback, meter, value=False)
    depth = min(len(search.D), max(1, (workers - 1).bit_length() + 2))
    jobs = [(drawing, l, pre, budget) for pre in search.prefixes(depth)]
    total = 0
    exhausted = False
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_exists_worker, j) for j in jobs]
        for fut in as_completed(futures):
            tag, kept, nodes = fut.result()
            total += nodes
            if tag == "found":
                for other in futures:
                    other.cancel()
                meter.nodes = total
                return _report(drawing, objective, "feasible", kept, meter, value=True, notes=("parallel",))
            exhausted |= tag == "budget"
    meter.nodes = total
    status = "budget_exhausted" if exhausted else "proven_impossible"
    return _report(drawing, objective, status, fallback, meter, value=None if exhausted else False, notes=("parallel",))


def max_kappa_given_connected(drawing: OnePlaneDrawing, budget: Budget | None = None, workers: int = 1) -> SolveReport:
    """Largest ``l`` such that some spanning plane subgraph is ``l``-connected."""
    budget = budget or Budget()
    start = time.perf_counter()
    r = min_components(drawing, budget)
    nodes = r.nodes_explored
    if r.value != 1:
        status: Status = "proven_impossible" if r.status == "optimal" else "budget_exhausted"
        return SolveReport("max_kappa_given_connected", status, r.kept, r.components, r.kappa, nodes, r.wall_time, 0, r.notes)
    best = r
    g = drawing.graph
    cap = min(g.degrees()) if g.n > 1 else 0
    cap = min(cap, g.n - 1)
    status = "optimal"
    l = best.kappa + 1
    while l <= cap:
        s = exists_l_connected(drawing, l, budget, workers=workers)
        nodes += s.nodes_explored
        if s.status == "feasible":
            best = s
            l = s.kappa + 1
        elif s.status == "proven_impossible":
            break
        else:
            status = "feasible"
            break
    return SolveReport(
        "max_kappa_given_connected",
        status,
        best.kept,
        best.components,
        best.kappa,
        nodes,
        round(time.perf_counter() - start, 6),
        best.kappa,
    )


def exact_search(
    drawing: OnePlaneDrawing,
    objective: str = "min_components",
    l: int | None = None,
    budget: Budget | None = None,
    workers: int = 1,
    seed: int = 0,
) -> SolveReport:
    """Exact search for one of the objectives ``min_components``,
    ``max_kappa_given_connected`` or ``exists_l_connected`` (with ``l``).

    Also accepts the spelled-out form ``exists_3_connected``.
    """
    if objective.startswith("exists_") and objective.endswith("_connected") and objective != "exists_l_connected":
        l = int(objective[len("exists_") : -len("_connected")])
        objective = "exists_l_connected"
    if objective == "min_components":
        return min_components(drawing, budget, seed=seed)
    if objective == "max_kappa_given_connected":
        return max_kappa_given_connected(drawing, budget, workers=workers)
    if objective == "exists_l_connected":
        if l is None:
            raise ValueError("exists_l_connected needs l")
        return exists_l_connected(drawing, l, budget, workers=workers, seed=seed)
    raise ValueError(f"unknown objective {objective!r}")


# ----------------------------------------------------------------------------
# local certificates


def _incident_pairs(drawing: OnePlaneDrawing, incident: Sequence[int]):
    inc = set(incident)
    partner = drawing.partner
    pairs = []
    seen = set()
    free = []
    for e in sorted(inc):
        p = partner.get(e)
        if p is None:
            free.append(e)
            continue
        key = (min(e, p), max(e, p))
        if key not in seen:
            seen.add(key)
            pairs.append(key)
    return free, pairs


def _local_choices(drawing, incident):
    """Every kept subset of ``incident`` allowed by the crossings that touch it."""
    free, pairs = _incident_pairs(drawing, incident)
    inc = set(incident)
    for bits in product((0, 1), repeat=len(pairs)):
        kept = set(free)
        for (a, b), bit in zip(pairs, bits):
            e = b if bit else a
            if e in inc:
                kept.add(e)
        yield kept


def local_gadget_capacity(drawing: OnePlaneDrawing, cycle: Sequence[int], incident: Sequence[int]) -> int:
    """Most incident inter-cycle edges a plane subgraph can keep at one inflated cycle.

    Enumerates the choices in every crossing pair that contains an incident
    edge.  Crossings inside the gadget do not touch the incident edges and
    cannot change the count.
    """
    cyc = set(cycle)
    g = drawing.graph
    for e in incident:
        if not set(g.edges[e]) & cyc:
            raise ValueError(f"edge {e} is not incident to the given cycle")
    return max(len(k) for k in _local_choices(drawing, incident))


def demand_capacity(drawing: OnePlaneDrawing, clusters: Sequence[Sequence[int]], index: int, demand: int, incident_of) -> int:
    """Upper bound on the incident edges kept at cluster ``index`` when every other cluster keeps ``demand``.

    Combines the local bound with a count over all clusters.  Each crossing
    pair keeps one inter-cluster edge, and an uncrossed one is always kept.
    Each such edge gives two cluster ends, and the other clusters use up at
    least ``demand`` ends apiece.
    """
    g = drawing.graph
    label = {}
    for i, c in enumerate(clusters):
        for v in c:
            label[v] = i

    def external(e: int) -> bool:
        a, b = g.edges[e]
        return label[a] != label[b]

    total = 0
    for c in drawing.crossings:
        if external(c.first) or external(c.second):
            total += 2
    for e in drawing.noncrossing_edges:
        if external(e):
            total += 2
    local = local_gadget_capacity(drawing, clusters[index], incident_of(index))
    return min(local, total - demand * (len(clusters) - 1))


def bundle_split_capacity(drawing: OnePlaneDrawing, groups: Sequence[Sequence[int]]) -> int:
    """Largest possible smallest kept count over edge groups at one cluster.

    The groups are the parallel bundles leaving the cluster.  The maximum is
    taken over the local crossing choices.
    """
    incident = [e for grp in groups for e in grp]
    best = 0
    for kept in _local_choices(drawing, incident):
        best = max(best, min(sum(1 for e in grp if e in kept) for grp in groups))
    return best


def table1_probe(drawing: OnePlaneDrawing, budget: Budget | None = None, levels: Sequence[int] = (1, 2, 3)) -> dict[int, str]:
    """``yes`` / ``no`` / ``unknown`` for each ``l`` in ``levels``."""
    out = {}
    for l in levels:
        r = exists_l_connected(drawing, l, budget)
        out[l] = {"feasible": "yes", "proven_impossible": "no"}.get(r.status, "unknown")
    return out


def brute_force(drawing: OnePlaneDrawing, objective: str, l: int | None = None):
    """Reference answer by enumerating every normalized subgraph (small inputs only)."""
    inst = _Instance(drawing)
    P = len(inst.pairs)
    if P > 16:
        raise ValueError("brute force limited to 16 crossings")
    best = None
    for bits in product((0, 1), repeat=P):
        kept = inst.kept_set(list(bits))
        comps, kappa = subgraph_stats(drawing, kept)
        if objective == "min_components":
            best = comps if best is None else min(best, comps)
        elif objective == "max_kappa_given_connected":
            if comps == 1:
                best = kappa if best is None else max(best, kappa)
        elif objective == "exists_l_connected":
            if comps == 1 and kappa >= l:
                return True
            best = False
    return best if objective != "max_kappa_given_connected" or best is not None else 0


__all__ = [
    "Budget",
    "SolveReport",
    "exchange_heuristic",
    "exact_search",
    "min_components",
    "exists_l_connected",
    "max_kappa_given_connected",
    "local_gadget_capacity",
    "demand_capacity",
    "bundle_split_capacity",
    "table1_probe",
    "subgraph_stats",
    "is_plane_subset",
]
