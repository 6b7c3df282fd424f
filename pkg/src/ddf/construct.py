"""Witness construction: backtracking realization under connectivity
targets, and the full-node augmentation of star digraphs."""

from __future__ import annotations

from .characterize import AugmentInstance, check_instance, is_feasible_target
from .connectivity import FlowNetwork, is_k_connected_masks
from .digraph import Digraph, full_mask, members, popcount, star_graph
from .errors import CapExceeded, InputError, InvariantViolation, SearchLimitExceeded
from .realize import RealizationResult

WITNESS_BUDGET = 7
NODE_LIMIT = 2_000_000


def _cell_caps(inst: AugmentInstance) -> list[list[int]]:
    n, spec = inst.spec.n, inst.spec
    if inst.simplicity == "augmented_simple":
        avoid = set(inst.D0.arcs)
    elif inst.simplicity == "augmenting_simple":
        avoid = set(inst.F0 or ())
    else:
        avoid = set()
    caps = []
    for u in range(n):
        row = []
        for v in range(n):
            if (u, v) in avoid or (u == v and inst.simplicity != "any"):
                row.append(0)
            elif inst.simplicity in ("augmented_simple", "augmenting_simple"):
                row.append(1)
            else:
                row.append(min(spec.m_o[u], spec.m_i[v]))
        caps.append(row)
    return caps


def _degrees_completable(rows: list[int], out_left, in_left, caps) -> bool:
    """Ore-type flow test: can the open rows still absorb the residual degrees?"""
    n = len(in_left)
    need = sum(out_left[u] for u in rows)
    if need != sum(in_left):
        return False
    if need == 0:
        return True
    src, sink = 2 * n, 2 * n + 1
    net = FlowNetwork(2 * n + 2)
    for u in rows:
        if out_left[u]:
            net.add_arc(src, u, out_left[u])
            for v in range(n):
                if caps[u][v] and in_left[v]:
                    net.add_arc(u, n + v, caps[u][v])
    for v in range(n):
        if in_left[v]:
            net.add_arc(n + v, sink, in_left[v])
    return net.max_flow(src, sink) == need


class _Search:
    def __init__(self, inst: AugmentInstance, node_limit: int):
        self.inst = inst
        self.n = inst.spec.n
        self.caps = _cell_caps(inst)
        self.base = inst.D0.matrix
        self.node_limit = node_limit
        self.visited = 0

    def meets_target(self, mat) -> bool:
        n, k = self.n, self.inst.k
        if self.inst.mode == "node":
            outs = [0] * n
            ins = [0] * n
            for u in range(n):
                for v in range(n):
                    if u != v and (mat[u][v] or self.base[u][v]):
                        outs[u] |= 1 << v
                        ins[v] |= 1 << u
            return is_k_connected_masks(n, outs, ins, k)
        if k <= 0 or n < 2:
            return True
        V = full_mask(n)
        for X in range(1, V):
            total = 0
            for u in members(V & ~X):
                for v in members(X):
                    total += mat[u][v] + self.base[u][v]
                    if total >= k:
                        break
                if total >= k:
                    break
            if total < k:
                return False
        return True

    def optimistic(self, mat, open_rows, in_left):
        best = [row[:] for row in mat]
        for u in open_rows:
            for v in range(self.n):
                if self.caps[u][v] and in_left[v]:
                    best[u][v] = min(self.caps[u][v], in_left[v])
        return best

    def rows_for(self, u, out_left, in_left):
        n = self.n
        cols = sorted(
            (v for v in range(n) if self.caps[u][v] and in_left[v]),
            key=lambda v: (-in_left[v], v),
        )
        row = [0] * n

        def rec(i, left):
            if left == 0:
                yield row[:]
                return
            if i == len(cols):
                return
            v = cols[i]
            for x in range(min(left, self.caps[u][v], in_left[v]), -1, -1):
                row[v] = x
                yield from rec(i + 1, left - x)
            row[v] = 0

        yield from rec(0, out_left[u])

    def run(self):
        n = self.n
        spec = self.inst.spec
        mat = [[0] * n for _ in range(n)]
        out_left = list(spec.m_o)
        in_left = list(spec.m_i)

        def rec(open_rows: list[int]):
            self.visited += 1
            if self.visited > self.node_limit:
                raise SearchLimitExceeded(f"witness search exceeded {self.node_limit} nodes")
            if not _degrees_completable(open_rows, out_left, in_left, self.caps):
                return None
            if not self.meets_target(self.optimistic(mat, open_rows, in_left)):
                return None
            if not open_rows:
                return [row[:] for row in mat]
            # largest remaining out-deficiency first
            u = min(open_rows, key=lambda w: (-out_left[w], w))
            rest = [w for w in open_rows if w != u]
            for row in list(self.rows_for(u, out_left, in_left)):
                for v in range(n):
                    in_left[v] -= row[v]
                mat[u] = row
                saved, out_left[u] = out_left[u], 0
                got = rec(rest)
                out_left[u] = saved
                mat[u] = [0] * n
                for v in range(n):
                    in_left[v] += row[v]
                if got is not None:
                    return got
            return None

        return rec(list(range(n)))


def construct_witness(
    inst: AugmentInstance, budget: int = WITNESS_BUDGET, node_limit: int = NODE_LIMIT
) -> RealizationResult:
    """A digraph ``D`` fitting the spec such that ``D0 + D`` meets the
    instance's target, or the checker's infeasibility certificate.

    Raises :class:`InvariantViolation` if the checker reports feasibility
    but the exhaustive search finds nothing.
    """
    n = inst.spec.n
    if n > budget:
        raise CapExceeded("witness construction", n, budget)
    verdict = check_instance(inst)
    if not verdict.feasible:
        return RealizationResult.from_verdict(verdict)
    found = _Search(inst, node_limit).run()
    if found is None:
        raise InvariantViolation("checker reports feasible but the witness search is exhausted")
    D = Digraph.from_matrix(found)
    if not is_feasible_target(inst, D):
        raise InvariantViolation("constructed witness fails its audit")
    return RealizationResult(True, D)


def star_augment(n: int, Z: int, X: int, k: int) -> list[tuple[int, int]]:
    """Arcs whose addition makes ``D*[Z, X]`` k-connected.

    With ``|X & Z| >= k`` none are needed.  Otherwise ``k - |X & Z|``
    disjoint arcs ``x_i z_i`` run from the lowest-indexed nodes of ``X - Z``
    to those of ``Z - X``.
    """
    V = full_mask(n)
    if X & ~V or Z & ~V:
        raise InputError("node sets leave the node range")
    common = popcount(X & Z)
    if common >= k:
        return []
    if popcount(X) < k or popcount(Z) < k:
        raise InputError(f"need |X|, |Z| >= k when |X & Z| < k (k={k})")
    need = k - common
    xs = members(X & ~Z)[:need]
    zs = members(Z & ~X)[:need]
    return list(zip(xs, zs))


def star_augmented(n: int, Z: int, X: int, k: int) -> Digraph:
    return star_graph(n, Z, X) + Digraph(n, star_augment(n, Z, X, k))
