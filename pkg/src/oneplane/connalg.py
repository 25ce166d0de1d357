"""Classical graph algorithms on (multi)graphs given as ``n`` plus an edge list.

Most functions accept either a :class:`~oneplane.core.RotationMultigraph` or
an ``(n, edges)`` pair, so callers can test spanning subgraphs without
building rotations.

Connectivity follows the path-counting definitions: ``p(u, v)`` counts
internally disjoint paths (a direct edge counts as one path) and ``p'(u, v)``
counts edge-disjoint paths.  Vertex connectivity is computed on the
simplification, edge connectivity on the multigraph.
"""

from __future__ import annotations

import random
import sys
from collections import Counter, deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Literal, Sequence

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import maximum_flow

from .core import OnePlaneError, RotationMultigraph, components as _components, genus

EdgeList = Sequence[tuple[int, int]]


class BudgetExhausted(OnePlaneError):
    """A search ran out of its node budget before reaching a verdict."""


def _unpack(graph) -> tuple[int, list[tuple[int, int]]]:
    if isinstance(graph, RotationMultigraph):
        return graph.n, list(graph.edges)
    n, edges = graph
    return n, list(edges)


def components(graph, kept=None) -> list[list[int]]:
    """Vertex partition of the spanning subgraph ``(V, kept)``.

    ``kept`` is a collection of edge ids; None keeps every edge.
    """
    n, edges = _unpack(graph)
    if kept is not None:
        edges = [edges[e] for e in sorted(set(kept))]
    return _components(n, edges)


def is_connected(graph) -> bool:
    n, edges = _unpack(graph)
    return n <= 1 or len(_components(n, edges)) == 1


class _FlowNetwork:
    """Unit-capacity network for one graph, reused across many (s, t) queries."""

    def __init__(self, n: int, edges: EdgeList, mode: str):
        self.n = n
        self.mode = mode
        rows: list[int] = []
        cols: list[int] = []
        caps: list[int] = []
        if mode == "vertex":
            simple = {(min(a, b), max(a, b)) for a, b in edges if a != b}
            self.adjacent = simple
            for v in range(n):
                rows.append(2 * v)
                cols.append(2 * v + 1)
                caps.append(1)
            # only vertex arcs can be saturated cheaply, so minimum cuts are vertex cuts
            big = n + 1
            for a, b in sorted(simple):
                rows += [2 * a + 1, 2 * b + 1]
                cols += [2 * b, 2 * a]
                caps += [big, big]
            size = 2 * n
        else:
            mult = Counter((min(a, b), max(a, b)) for a, b in edges if a != b)
            self.adjacent = set(mult)
            for (a, b), k in sorted(mult.items()):
                rows += [a, b]
                cols += [b, a]
                caps += [k, k]
            size = n
        self.matrix = sp.csr_matrix(
            (np.array(caps, dtype=np.int32), (np.array(rows, dtype=np.int32), np.array(cols, dtype=np.int32))),
            shape=(size, size),
        )
        self.matrix.sum_duplicates()

    def terminals(self, u: int, v: int) -> tuple[int, int]:
        return (2 * u + 1, 2 * v) if self.mode == "vertex" else (u, v)

    def flow(self, u: int, v: int):
        s, t = self.terminals(u, v)
        return maximum_flow(self.matrix, s, t)

    def value(self, u: int, v: int) -> int:
        return int(self.flow(u, v).flow_value)

    def source_side(self, u: int, v: int) -> set[int]:
        """Network nodes reachable from the source in the residual graph of a max flow."""
        res = self.flow(u, v)
        s, _ = self.terminals(u, v)
        cap = self.matrix.tocoo()
        flow = res.flow.tocoo() if hasattr(res.flow, "tocoo") else sp.coo_matrix(res.flow)
        residual: dict[tuple[int, int], int] = {}
        for a, b, c in zip(cap.row.tolist(), cap.col.tolist(), cap.data.tolist()):
            residual[(a, b)] = residual.get((a, b), 0) + c
        for a, b, f in zip(flow.row.tolist(), flow.col.tolist(), flow.data.tolist()):
            residual[(a, b)] = residual.get((a, b), 0) - f
        out: dict[int, list[int]] = {}
        for (a, b), r in residual.items():
            if r > 0:
                out.setdefault(a, []).append(b)
        seen = {s}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in out.get(x, ()):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen


def disjoint_paths(graph, u: int, v: int, mode: Literal["vertex", "edge"] = "vertex") -> int:
    """``p(u, v)`` (vertex mode) or ``p'(u, v)`` (edge mode) by unit-capacity max flow."""
    if u == v:
        raise OnePlaneError("disjoint_paths needs two distinct vertices")
    n, edges = _unpack(graph)
    if mode == "vertex" and any({a, b} == {u, v} for a, b in edges):
        rest = [(a, b) for a, b in edges if {a, b} != {u, v}]
        return 1 + _FlowNetwork(n, rest, mode).value(u, v)
    return _FlowNetwork(n, edges, mode).value(u, v)


@dataclass(frozen=True)
class ConnectivityReport:
    kappa: int
    kappa_edge: int
    vertex_cut: tuple[int, ...]
    edge_cut: tuple[int, ...]

    @property
    def witness_cut(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return self.vertex_cut, self.edge_cut


def _degree_order(n: int, edges: EdgeList) -> list[int]:
    deg = [0] * n
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    return sorted(range(n), key=lambda v: (deg[v], v))


def vertex_connectivity(graph, *, at_least: int | None = None, with_cut: bool = False):
    """Vertex connectivity of the simplification.

    With ``at_least=l`` the function only decides ``kappa >= l`` and returns
    a bool, which needs ``l`` source vertices instead of ``kappa + 1``.
    """
    n, edges = _unpack(graph)
    if at_least is not None and at_least <= 0:
        return True
    if n < 2:
        if at_least is not None:
            return False
        raise OnePlaneError("connectivity needs at least two vertices")
    if not is_connected((n, edges)):
        if at_least is not None:
            return False
        comps = _components(n, edges)
        return (0, ()) if with_cut else 0
    if at_least == 1:
        return True
    simple_neighbours = [set() for _ in range(n)]
    for a, b in edges:
        if a != b:
            simple_neighbours[a].add(b)
            simple_neighbours[b].add(a)
    complete = all(len(s) == n - 1 for s in simple_neighbours)
    if not complete and (at_least is None or at_least <= 2):
        # linear-time answers for the questions "kappa >= 2" and "kappa == 1"
        cuts = articulation_points((n, edges))
        if cuts:
            if at_least is not None:
                return False
            return (1, (min(cuts),)) if with_cut else 1
        if at_least is not None:
            return True
    net = _FlowNetwork(n, edges, "vertex")
    order = _degree_order(n, edges)
    best = n - 1
    best_pair = None
    limit = at_least
    rounds = limit if limit is not None else None
    i = 0
    while i < n:
        if rounds is not None and i >= rounds:
            break
        if rounds is None and i > best:
            break
        u = order[i]
        for j in range(i + 1, n):
            w = order[j]
            if (min(u, w), max(u, w)) in net.adjacent:
                continue
            p = net.value(u, w)
            if p < best:
                best, best_pair = p, (u, w)
                if limit is not None and best < limit:
                    return False
        i += 1
    if limit is not None:
        return best >= limit
    if not with_cut:
        return best
    if best_pair is None:
        # complete graph: every vertex but one must go
        return best, tuple(sorted(order[1:]))
    u, w = best_pair
    side = net.source_side(u, w)
    cut = tuple(sorted(v for v in range(n) if 2 * v in side and 2 * v + 1 not in side))
    return best, cut


def edge_connectivity(graph, *, at_least: int | None = None, with_cut: bool = False):
    """Edge connectivity of the multigraph (parallel edges count separately)."""
    n, edges = _unpack(graph)
    if at_least is not None and at_least <= 0:
        return True
    if n < 2:
        if at_least is not None:
            return False
        raise OnePlaneError("connectivity needs at least two vertices")
    if not is_connected((n, edges)):
        if at_least is not None:
            return False
        return (0, ()) if with_cut else 0
    net = _FlowNetwork(n, edges, "edge")
    best = None
    best_pair = None
    for w in range(1, n):
        p = net.value(0, w)
        if best is None or p < best:
            best, best_pair = p, (0, w)
            if at_least is not None and best < at_least:
                return False
    if at_least is not None:
        return True
    if not with_cut:
        return best
    side = net.source_side(*best_pair)
    cut = tuple(e for e, (a, b) in enumerate(edges) if (a in side) != (b in side))
    return best, cut


def connectivity(graph) -> ConnectivityReport:
    """Vertex and edge connectivity with witness cuts."""
    n, edges = _unpack(graph)
    if n < 2:
        raise OnePlaneError("connectivity needs at least two vertices")
    kappa, vcut = vertex_connectivity((n, edges), with_cut=True)
    lam, ecut = edge_connectivity((n, edges), with_cut=True)
    return ConnectivityReport(kappa, lam, vcut, ecut)


def cut_edges(graph, component: Sequence[int] | None = None, kept=None) -> set[int]:
    """Bridges (edge ids) of the subgraph induced on ``component`` by ``kept`` edges.

    Parallel edges are never bridges.
    """
    n, edges = _unpack(graph)
    ids = range(len(edges)) if kept is None else sorted(set(kept))
    verts = set(range(n)) if component is None else set(component)
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in verts}
    for e in ids:
        a, b = edges[e]
        if a in verts and b in verts:
            adj[a].append((b, e))
            adj[b].append((a, e))
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    bridges: set[int] = set()
    counter = 0
    for root in sorted(verts):
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, via, it = stack[-1]
            advanced = False
            for w, e in it:
                if e == via:
                    continue
                if w in disc:
                    low[v] = min(low[v], disc[w])
                else:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, e, iter(adj[w])))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                if stack:
                    parent = stack[-1][0]
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        bridges.add(via)
    return bridges


def articulation_points(graph) -> set[int]:
    """Cut vertices of a (multi)graph by iterative Tarjan low-points."""
    n, edges = _unpack(graph)
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for e, (a, b) in enumerate(edges):
        if a != b:
            adj[a].append((b, e))
            adj[b].append((a, e))
    disc = [-1] * n
    low = [0] * n
    cut: set[int] = set()
    counter = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = counter
        counter += 1
        children = 0
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, via, it = stack[-1]
            advanced = False
            for w, e in it:
                if e == via:
                    continue
                if disc[w] >= 0:
                    low[v] = min(low[v], disc[w])
                else:
                    disc[w] = low[w] = counter
                    counter += 1
                    if v == root:
                        children += 1
                    stack.append((w, e, iter(adj[w])))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                if stack:
                    parent = stack[-1][0]
                    low[parent] = min(low[parent], low[v])
                    if parent != root and low[v] >= disc[parent]:
                        cut.add(parent)
        if children > 1:
            cut.add(root)
    return cut


def is_bridgeless(graph) -> bool:
    return is_connected(graph) and not cut_edges(graph)


@dataclass(frozen=True)
class HamiltonResult:
    status: Literal["found", "none", "budget_exhausted"]
    cycle: tuple[int, ...] | None
    nodes: int


def hamiltonian_cycle(graph, budget: int = 10**7) -> HamiltonResult:
    """Exhaustive backtracking search for a Hamiltonian cycle.

    ``status == "none"`` is only returned once the whole search space has
    been exhausted; running out of ``budget`` nodes gives
    ``"budget_exhausted"`` instead.
    """
    n, edges = _unpack(graph)
    if n < 3:
        return HamiltonResult("none", None, 0)
    if not is_connected((n, edges)):
        return HamiltonResult("none", None, 0)
    adj = [sorted({b if a == v else a for a, b in edges if v in (a, b) and a != b}) for v in range(n)]
    if any(len(a) < 2 for a in adj):
        return HamiltonResult("none", None, 0)
    start = min(range(n), key=lambda v: (len(adj[v]), v))
    visited = [False] * n
    visited[start] = True
    path = [start]
    nodes = 0

    def available(x: int, end: int) -> int:
        return sum(1 for y in adj[x] if not visited[y] or y == end or y == start)

    def feasible(end: int) -> bool:
        for x in adj[end]:
            if not visited[x] and available(x, end) < 2:
                return False
        # unvisited vertices must stay connected to each other and reachable from end
        todo = [x for x in adj[end] if not visited[x]]
        if not todo:
            return len(path) == n
        seen = {todo[0]}
        stack = [todo[0]]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not visited[y] and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == n - len(path)

    class _Out(Exception):
        pass

    def rec(end: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _Out
        if len(path) == n:
            return start in adj[end]
        forced = [x for x in adj[end] if not visited[x] and available(x, end) == 2]
        # the start vertex still has both cycle slots open, so it may take two forced neighbours
        if len(forced) > (2 if len(path) == 1 else 1):
            return False
        choices = forced if forced else [x for x in adj[end] if not visited[x]]
        for x in choices:
            visited[x] = True
            path.append(x)
            if feasible(x) and rec(x):
                return True
            path.pop()
            visited[x] = False
        return False

    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 10 * n + 1000))
    try:
        found = rec(start)
    except _Out:
        return HamiltonResult("budget_exhausted", None, nodes)
    finally:
        sys.setrecursionlimit(old)
    return HamiltonResult("found" if found else "none", tuple(path) if found else None, nodes)


def is_hamiltonian_cycle(graph, cycle: Sequence[int]) -> bool:
    n, edges = _unpack(graph)
    present = {frozenset(e) for e in edges}
    return (
        sorted(cycle) == list(range(n))
        and all(frozenset((cycle[i], cycle[(i + 1) % n])) in present for i in range(n))
    )


def perfect_matchings(graph, budget: int = 10**7) -> Iterator[frozenset[int]]:
    """Every perfect matching as a set of edge ids, in a deterministic order.

    Raises:
        BudgetExhausted: after ``budget`` search nodes.
    """
    n, edges = _unpack(graph)
    inc: list[list[int]] = [[] for _ in range(n)]
    for e, (a, b) in enumerate(edges):
        if a != b:
            inc[a].append(e)
            inc[b].append(e)
    matched = [False] * n
    chosen: list[int] = []
    nodes = 0

    def rec() -> Iterator[frozenset[int]]:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExhausted(f"perfect matching enumeration exceeded {budget} nodes")
        best = None
        best_opts: list[int] = []
        for v in range(n):
            if matched[v]:
                continue
            opts = [e for e in inc[v] if not matched[edges[e][0]] and not matched[edges[e][1]]]
            if best is None or len(opts) < len(best_opts):
                best, best_opts = v, opts
                if not opts:
                    return
        if best is None:
            yield frozenset(chosen)
            return
        for e in best_opts:
            a, b = edges[e]
            matched[a] = matched[b] = True
            chosen.append(e)
            yield from rec()
            chosen.pop()
            matched[a] = matched[b] = False

    if n % 2:
        return
    yield from rec()


def two_factors(graph, budget: int = 10**7) -> Iterator[frozenset[int]]:
    """2-factors of a cubic graph, as complements of perfect matchings."""
    n, edges = _unpack(graph)
    deg = Counter()
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    if any(deg[v] != 3 for v in range(n)):
        raise OnePlaneError("two_factors needs a cubic graph")
    every = frozenset(range(len(edges)))
    for pm in perfect_matchings((n, edges), budget):
        yield every - pm


def factor_cycles(graph, factor) -> list[list[int]]:
    """Vertex sets of the cycles of a 2-regular spanning subgraph."""
    n, _ = _unpack(graph)
    return components(graph, factor)


@dataclass(frozen=True)
class EdgeColoring3:
    color: tuple[int, ...]

    def is_proper(self, graph) -> bool:
        n, edges = _unpack(graph)
        seen: dict[tuple[int, int], int] = {}
        for e, (a, b) in enumerate(edges):
            c = self.color[e]
            if c not in (1, 2, 3):
                return False
            for v in (a, b):
                if (v, c) in seen:
                    return False
                seen[(v, c)] = e
        return True

    def color_class(self, c: int) -> frozenset[int]:
        return frozenset(e for e, x in enumerate(self.color) if x == c)


def tait_coloring(graph: RotationMultigraph, budget: int = 10**6, seed: int | None = None) -> EdgeColoring3:
    """Proper 3-edge-colouring of a cubic bridgeless plane graph by backtracking.

    ``seed`` shuffles the colour preference so different colourings can be
    drawn; None gives the deterministic first colouring.

    Raises:
        OnePlaneError: for non-cubic, bridged or non-plane input.
        BudgetExhausted: when the node budget runs out.
    """
    if not graph.is_regular(3):
        raise OnePlaneError("tait_coloring needs a cubic graph")
    if not is_bridgeless(graph):
        raise OnePlaneError("tait_coloring needs a bridgeless graph")
    if genus(graph) != 0:
        raise OnePlaneError("tait_coloring needs a plane rotation system")
    rng = random.Random(seed)
    m = graph.m
    color = [0] * m
    used = [set() for _ in range(graph.n)]
    # edge order: breadth-first from edge 0 so constraints propagate early
    order: list[int] = []
    seen_e = [False] * m
    queue = deque([0])
    seen_e[0] = True
    while queue:
        e = queue.popleft()
        order.append(e)
        for v in graph.edges[e]:
            for f in graph.incidence[v]:
                if not seen_e[f]:
                    seen_e[f] = True
                    queue.append(f)
    prefs = [1, 2, 3]
    nodes = 0

    def rec(i: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExhausted(f"tait_coloring exceeded {budget} nodes")
        if i == m:
            return True
        e = order[i]
        a, b = graph.edges[e]
        opts = [c for c in prefs if c not in used[a] and c not in used[b]]
        if seed is not None:
            rng.shuffle(opts)
        for c in opts:
            color[e] = c
            used[a].add(c)
            used[b].add(c)
            if rec(i + 1):
                return True
            used[a].discard(c)
            used[b].discard(c)
        color[e] = 0
        return False

    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 4 * m + 1000))
    try:
        ok = rec(0)
    finally:
        sys.setrecursionlimit(old)
    if not ok:
        raise OnePlaneError("no proper 3-edge-colouring exists")
    return EdgeColoring3(tuple(color))


def parity_check(graph, coloring: EdgeColoring3, cut: Sequence[int]) -> bool:
    """True iff the three edges of the edge cut ``cut`` carry three distinct colours.

    Raises:
        OnePlaneError: if ``cut`` does not disconnect the graph.
    """
    n, edges = _unpack(graph)
    cut = list(cut)
    if len(cut) != 3 or len(set(cut)) != 3:
        raise OnePlaneError("parity_check takes three distinct edges")
    rest = [edges[e] for e in range(len(edges)) if e not in set(cut)]
    if len(_components(n, rest)) < 2:
        raise OnePlaneError("edge set is not a cut")
    return len({coloring.color[e] for e in cut}) == 3


def three_edge_cuts(graph) -> list[tuple[int, int, int]]:
    """All 3-edge sets whose removal disconnects the graph (brute force)."""
    n, edges = _unpack(graph)
    out = []
    for trip in combinations(range(len(edges)), 3):
        s = set(trip)
        rest = [edges[e] for e in range(len(edges)) if e not in s]
        if len(_components(n, rest)) >= 2:
            out.append(trip)
    return out


@dataclass(frozen=True)
class P2Partition:
    paths: tuple[tuple[int, int, int], ...]
    leftover: int | None

    def pairs(self) -> list[tuple[int, int]]:
        return [(e, f) for e, f, _ in self.paths]


def p2_partition(graph) -> P2Partition:
    """Split the edges of a connected graph into paths of length two.

    Each path is ``(e, f, middle)``; one edge is left over when the edge count
    is odd.  Works bottom-up on a depth-first tree: a vertex pairs its unused
    edges towards descendants and ancestors, borrowing the edge to its parent
    when the count is odd.
    """
    n, edges = _unpack(graph)
    if not is_connected((n, edges)):
        raise OnePlaneError("p2_partition needs a connected graph")
    inc: list[list[int]] = [[] for _ in range(n)]
    for e, (a, b) in enumerate(edges):
        inc[a].append(e)
        inc[b].append(e)
    parent_edge = [-1] * n
    depth = [-1] * n
    order = []
    root = 0
    depth[root] = 0
    stack = [(root, iter(inc[root]))]
    order.append(root)
    while stack:
        v, it = stack[-1]
        for e in it:
            a, b = edges[e]
            w = b if a == v else a
            if depth[w] < 0:
                depth[w] = depth[v] + 1
                parent_edge[w] = e
                order.append(w)
                stack.append((w, iter(inc[w])))
                break
        else:
            stack.pop()
    tree = set(e for e in parent_edge if e >= 0)
    pending: list[list[int]] = [[] for _ in range(n)]
    for e, (a, b) in enumerate(edges):
        if e in tree:
            continue
        # a back edge is handled at its deeper endpoint
        low = a if depth[a] > depth[b] else b
        pending[low].append(e)
    paths = []
    leftover = None
    for v in reversed(order):
        todo = pending[v]
        if len(todo) % 2 and parent_edge[v] >= 0:
            todo.append(parent_edge[v])
        elif parent_edge[v] >= 0:
            a, b = edges[parent_edge[v]]
            pending[b if a == v else a].append(parent_edge[v])
        if len(todo) % 2:
            leftover = todo.pop()
        for i in range(0, len(todo), 2):
            paths.append((todo[i], todo[i + 1], v))
    return P2Partition(tuple(paths), leftover)


def is_p2_partition(graph, part: P2Partition) -> bool:
    n, edges = _unpack(graph)
    used = [e for a, b, _ in part.paths for e in (a, b)]
    if part.leftover is not None:
        used.append(part.leftover)
    if sorted(used) != list(range(len(edges))):
        return False
    for a, b, mid in part.paths:
        if mid not in edges[a] or mid not in edges[b]:
            return False
    return (part.leftover is not None) == (len(edges) % 2 == 1)
