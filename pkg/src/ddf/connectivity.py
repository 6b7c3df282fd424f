"""Exact strong, k-edge and k-node connectivity.

Flow-based routines go through :class:`FlowNetwork`, a plain Dinic
implementation with integer capacities.  The removal-based
:func:`is_k_connected` and the bi-set clauses of :func:`connectivity_clauses`
are independent code paths kept deliberately separate so they can be
cross-checked.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations

from .digraph import Digraph, full_mask, iter_bits, popcount, subsets

INF = float("inf")


class FlowNetwork:
    """Integer-capacity network solved by Dinic's algorithm."""

    def __init__(self, num_nodes: int):
        self.num_nodes = num_nodes
        self._head: list[int] = []
        self._cap: list[int] = []
        self._adj: list[list[int]] = [[] for _ in range(num_nodes)]
        self._orig: list[int] = []
        self._tails: list[int] = []

    def add_arc(self, u: int, v: int, cap: int) -> int:
        """Add arc ``u -> v``; returns an id usable with :meth:`flow_on`."""
        if cap < 0:
            raise ValueError("capacities must be non-negative")
        idx = len(self._head)
        self._head += [v, u]
        self._cap += [cap, 0]
        self._adj[u].append(idx)
        self._adj[v].append(idx + 1)
        self._orig += [cap, 0]
        self._tails += [u, v]
        return idx

    def _bfs(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.num_nodes
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in self._adj[u]:
                v = self._head[e]
                if self._cap[e] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level if level[t] >= 0 else None

    def _dfs(self, u, t, pushed, level, it):
        if u == t:
            return pushed
        adj = self._adj[u]
        while it[u] < len(adj):
            e = adj[it[u]]
            v = self._head[e]
            if self._cap[e] > 0 and level[v] == level[u] + 1:
                got = self._dfs(v, t, min(pushed, self._cap[e]), level, it)
                if got:
                    self._cap[e] -= got
                    self._cap[e ^ 1] += got
                    return got
            it[u] += 1
        return 0

    def max_flow(self, s: int, t: int, limit: float = INF) -> int:
        """Push flow from ``s`` to ``t`` until maximal or ``limit`` is reached."""
        if s == t:
            raise ValueError("source and sink must differ")
        total = 0
        while total < limit:
            level = self._bfs(s, t)
            if level is None:
                break
            it = [0] * self.num_nodes
            while total < limit:
                got = self._dfs(s, t, limit - total, level, it)
                if not got:
                    break
                total += got
        return int(total)

    def flow_on(self, arc_id: int) -> int:
        return self._orig[arc_id] - self._cap[arc_id]

    def source_side(self, s: int) -> set[int]:
        """Nodes reachable from ``s`` in the residual network (a min cut side)."""
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in self._adj[u]:
                v = self._head[e]
                if self._cap[e] > 0 and v not in seen:
                    seen.add(v)
                    queue.append(v)
        return seen


def max_flow(num_nodes: int, arcs, s: int, t: int) -> tuple[int, list[int]]:
    """Max-flow value and an integral flow for ``arcs = [(u, v, cap), ...]``."""
    net = FlowNetwork(num_nodes)
    ids = [net.add_arc(u, v, c) for u, v, c in arcs]
    value = net.max_flow(s, t)
    return value, [net.flow_on(i) for i in ids]


# -- reachability -------------------------------------------------------------


def _reach(start: int, nbrs: tuple[int, ...] | list[int], alive: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= nbrs[u]
        nxt &= alive & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def reach_masks(g: Digraph) -> list[int]:
    """``reach[u]``: nodes reachable from ``u`` by a dipath (``u`` included)."""
    outs = [g.out_neighbors(u) for u in range(g.n)]
    return [_reach(u, outs, g.V) for u in range(g.n)]


def is_strong_masks(outs, ins, alive: int) -> bool:
    """Strong connectivity of the subgraph induced by ``alive``."""
    if alive == 0:
        return True
    r = (alive & -alive).bit_length() - 1
    return _reach(r, outs, alive) == alive and _reach(r, ins, alive) == alive


def is_strong(g: Digraph) -> bool:
    outs = [g.out_neighbors(u) for u in range(g.n)]
    ins = [g.in_neighbors(u) for u in range(g.n)]
    return is_strong_masks(outs, ins, g.V)


def is_k_connected_masks(n: int, outs, ins, k: int) -> bool:
    """Removal definition on adjacency masks: ``k <= n-1`` and every deletion
    of fewer than ``k`` nodes leaves a strong digraph."""
    if k <= 0:
        return True
    if k > n - 1:
        return False
    V = full_mask(n)
    for size in range(k):
        for removed in combinations(range(n), size):
            mask = V
            for v in removed:
                mask &= ~(1 << v)
            if not is_strong_masks(outs, ins, mask):
                return False
    return True


def is_k_connected(g: Digraph, k: int) -> bool:
    """Definition-level k-node-connectivity by node removal."""
    outs = [g.out_neighbors(u) for u in range(g.n)]
    ins = [g.in_neighbors(u) for u in range(g.n)]
    return is_k_connected_masks(g.n, outs, ins, k)


# -- flow-based connectivity --------------------------------------------------


def local_edge_connectivity(g: Digraph, s: int, t: int, limit: float = INF) -> int:
    net = FlowNetwork(g.n)
    for u in range(g.n):
        for v in range(g.n):
            m = g.multiplicity(u, v)
            if m and u != v:
                net.add_arc(u, v, m)
    return net.max_flow(s, t, limit)


def edge_connectivity(g: Digraph) -> int:
    """Minimum in-degree over non-empty proper subsets, via ``2(n-1)`` flows."""
    if g.n < 2:
        raise ValueError("edge connectivity needs at least two nodes")
    best = INF
    for t in range(1, g.n):
        best = min(best, local_edge_connectivity(g, 0, t, best))
        best = min(best, local_edge_connectivity(g, t, 0, best))
    return int(best)


def is_k_edge_connected(g: Digraph, k: int) -> bool:
    if k <= 0 or g.n < 2:
        return True
    return edge_connectivity(g) >= k


def min_in_degree_cut(g: Digraph) -> int:
    """Minimum ``rho(X)`` over ``0 < X < V`` by subset enumeration."""
    V = g.V
    return min(g.in_degree_set(X) for X in range(1, V))


def openly_disjoint_paths(g: Digraph, s: int, t: int, limit: float = INF) -> int:
    """Maximum number of openly disjoint ``st``-paths (a direct arc counts as
    one path).  Parallel arcs and loops are ignored."""
    if s == t:
        raise ValueError("s and t must differ")
    n = g.n
    # node v: in-copy v, out-copy v + n
    net = FlowNetwork(2 * n)
    for v in range(n):
        if v != s and v != t:
            net.add_arc(v, v + n, 1)
    for u in range(n):
        for v in iter_bits(g.out_neighbors(u)):
            net.add_arc(u + n, v, 1)
    return net.max_flow(s + n, t, limit)


def node_connectivity(g: Digraph) -> int:
    """Largest ``k`` such that ``g`` is k-connected (collapsed semantics)."""
    n = g.n
    if n <= 1:
        return 0
    best = n - 1
    for s in range(n):
        outs = g.out_neighbors(s)
        for t in range(n):
            if t != s and not (outs >> t) & 1:
                best = min(best, openly_disjoint_paths(g, s, t, best))
                if best == 0:
                    return 0
    return best


# -- bi-set formulations ------------------------------------------------------


def _nontrivial_bisets(n: int):
    V = full_mask(n)
    for inner in range(1, V + 1):
        rest = V & ~inner
        for wall in subsets(rest):
            outer = inner | wall
            if outer != V:
                yield outer, inner


def biset_in_degree(g: Digraph, outer: int, inner: int) -> int:
    """Arcs entering both ``outer`` and ``inner``."""
    return g.d_between(g.V & ~outer, inner)


def min_wall_oneway(g: Digraph) -> int:
    """Minimum wall size over non-trivial one-way bi-sets; ``n-1`` if none."""
    n = g.n
    best = max(n - 1, 0)
    for outer, inner in _nontrivial_bisets(n):
        if popcount(outer) - popcount(inner) < best and biset_in_degree(g, outer, inner) == 0:
            best = popcount(outer) - popcount(inner)
    return best


def min_in_plus_wall(g: Digraph) -> int:
    """Minimum of ``rho(B) + w(B)`` over non-trivial bi-sets; ``n-1`` if none."""
    best = max(g.n - 1, 0)
    for outer, inner in _nontrivial_bisets(g.n):
        best = min(best, biset_in_degree(g, outer, inner) + popcount(outer) - popcount(inner))
    return best


def min_openly_disjoint_all_pairs(g: Digraph) -> int:
    """Minimum openly-disjoint path count over every ordered pair."""
    if g.n <= 1:
        return 0
    return min(
        openly_disjoint_paths(g, s, t) for s in range(g.n) for t in range(g.n) if s != t
    )


def connectivity_clauses(g: Digraph, k: int) -> dict[str, bool]:
    """The four equivalent forms of k-connectivity, each via its own path."""
    simple = g.collapse()
    in_range = k <= g.n - 1
    return {
        "A1": is_k_connected(simple, k),
        "A2": in_range and min_in_plus_wall(simple) >= k,
        "A3": in_range and min_wall_oneway(simple) >= k,
        "B": in_range and min_openly_disjoint_all_pairs(simple) >= k,
    }
