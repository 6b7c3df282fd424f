"""Bipartite side: k-elementary bigraphs, their degree sequences and the
correspondence with k-connected digraphs.

A bigraph has sides ``S = {s_0..s_{n-1}}`` and ``T = {t_0..t_{n-1}}``;
edges are ``(s, t)`` index pairs.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from itertools import combinations

from .characterize import AugmentInstance, check_k_connected_degree_sequence
from .connectivity import FlowNetwork
from .construct import construct_witness
from .digraph import DegreeSpec, Digraph, full_mask, members, popcount, to_mask
from .errors import InputError, InvariantViolation, PreconditionError
from .realize import prefix_masks
from .verdict import FeasibilityVerdict

Edge = tuple[int, int]


@dataclass
class BipartiteInstance:
    """Simple bigraph with equal sides; ``m_S``/``m_T`` default to its degrees."""

    n: int
    edges: tuple[Edge, ...] = ()
    m_S: tuple[int, ...] | None = None
    m_T: tuple[int, ...] | None = None
    matching: tuple[Edge, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        n = self.n
        if not isinstance(n, int) or n < 0:
            raise InputError(f"side size must be a non-negative integer, got {n!r}")
        clean = []
        for e in self.edges:
            s, t = int(e[0]), int(e[1])
            if not (0 <= s < n and 0 <= t < n):
                raise InputError(f"edge ({s}, {t}) leaves 0..{n - 1}")
            clean.append((s, t))
        if len(set(clean)) != len(clean):
            raise InputError("bigraph must be simple (repeated edge)")
        self.edges = tuple(sorted(clean))
        deg_S = tuple(sum(1 for s, _ in self.edges if s == i) for i in range(n))
        deg_T = tuple(sum(1 for _, t in self.edges if t == i) for i in range(n))
        self.m_S = deg_S if self.m_S is None else tuple(int(x) for x in self.m_S)
        self.m_T = deg_T if self.m_T is None else tuple(int(x) for x in self.m_T)
        if len(self.m_S) != n or len(self.m_T) != n:
            raise InputError("side degree specs must have n entries")
        if min(self.m_S + self.m_T, default=0) < 0:
            raise InputError("side degrees must be non-negative")
        if sum(self.m_S) != sum(self.m_T):
            raise InputError("spec totals mismatch: sum(m_S) != sum(m_T)")
        if self.matching is not None:
            self.matching = tuple(sorted((int(s), int(t)) for s, t in self.matching))

    @property
    def adjacency(self) -> list[int]:
        """``adj[s]``: bitmask of the T-neighbours of ``s``."""
        adj = [0] * self.n
        for s, t in self.edges:
            adj[s] |= 1 << t
        return adj

    def fits(self) -> bool:
        adj = self.adjacency
        deg_T = [0] * self.n
        for s, t in self.edges:
            deg_T[t] += 1
        return tuple(popcount(a) for a in adj) == self.m_S and tuple(deg_T) == self.m_T

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "edges": [list(e) for e in self.edges],
            "m_S": list(self.m_S),
            "m_T": list(self.m_T),
        }
        if self.matching is not None:
            out["matching"] = [list(e) for e in self.matching]
        return out


def _check_matching(inst: BipartiteInstance, M: Sequence[Edge]) -> dict[int, int]:
    edges = set(inst.edges)
    mate = {}
    for s, t in M:
        if (s, t) not in edges:
            raise InputError(f"matching edge ({s}, {t}) is not an edge")
        mate[s] = t
    if sorted(mate) != list(range(inst.n)) or sorted(mate.values()) != list(range(inst.n)):
        raise InputError("not a perfect matching")
    return mate


def bigraph_to_digraph(inst: BipartiteInstance, M: Sequence[Edge]) -> Digraph:
    """Node ``v_i`` stands for the matching edge at ``s_i``; a non-matching
    edge ``s_j t`` with ``t`` matched to ``s_i`` becomes the arc ``v_i v_j``."""
    mate = _check_matching(inst, M)
    owner = {t: s for s, t in mate.items()}
    arcs = [(owner[t], s) for s, t in inst.edges if mate[s] != t]
    return Digraph(inst.n, arcs)


def digraph_to_bigraph(g: Digraph) -> tuple[BipartiteInstance, list[Edge]]:
    """Edges ``s_i t_i`` plus ``s_h t_j`` for every arc ``v_j v_h``."""
    if not g.is_simple:
        raise InputError("only simple digraphs correspond to simple bigraphs")
    matching = [(i, i) for i in range(g.n)]
    edges = matching + [(h, j) for j, h in g.arcs]
    return BipartiteInstance(g.n, tuple(edges), matching=tuple(matching)), matching


def _perfectly_matchable(adj: Sequence[int], rows: Sequence[int], cols: int) -> bool:
    size = len(rows)
    if size != popcount(cols):
        return False
    if size == 0:
        return True
    n = len(adj)
    src, sink = 2 * n, 2 * n + 1
    net = FlowNetwork(2 * n + 2)
    for s in rows:
        net.add_arc(src, s, 1)
        for t in members(adj[s] & cols):
            net.add_arc(s, n + t, 1)
    for t in members(cols):
        net.add_arc(n + t, sink, 1)
    return net.max_flow(src, sink) == size


def is_k_elementary(inst: BipartiteInstance, k: int, method: str = "flow") -> bool:
    """k-elementarity (``1 <= k <= n-1``).

    ``"flow"``: deleting any ``k`` nodes from each side leaves a perfectly
    matchable bigraph (one matching flow per deletion pair).  ``"hall"``:
    ``|Gamma(X)| >= |X| + k`` for every non-empty ``X`` of ``S`` with
    ``|X| <= n - k``.  ``"removal"``: the definition, deletions of every
    size ``j <= k``.
    """
    n = inst.n
    if k < 1 or k > n - 1:
        return False
    adj = inst.adjacency
    V = full_mask(n)
    if method == "hall":
        for X in range(1, V + 1):
            if popcount(X) <= n - k:
                gamma = 0
                for s in members(X):
                    gamma |= adj[s]
                if popcount(gamma) < popcount(X) + k:
                    return False
        return True
    if method not in ("flow", "removal"):
        raise InputError(f"unknown method {method!r}")
    sizes = [k] if method == "flow" else range(k + 1)
    for j in sizes:
        for rs in combinations(range(n), j):
            rows = [s for s in range(n) if s not in rs]
            for rt in combinations(range(n), j):
                if not _perfectly_matchable(adj, rows, V & ~to_mask(rt)):
                    return False
    return True


def _gale_ryser(m_S, m_T) -> FeasibilityVerdict:
    n = len(m_S)
    gamma = sum(m_S)
    xs = prefix_masks(sorted(range(n), key=lambda v: (-m_S[v], v)))
    zs = prefix_masks(sorted(range(n), key=lambda v: (-m_T[v], v)))
    for X in xs:
        for Z in zs:
            lhs = sum(m_S[s] for s in members(X)) + sum(m_T[t] for t in members(Z)) - popcount(X) * popcount(Z)
            if lhs > gamma:
                return FeasibilityVerdict.violated("gale-ryser", lhs, gamma, X=members(X), Z=members(Z))
    return FeasibilityVerdict.ok()


def elementary_lhs(m_S, m_T, X: int, Z: int, k: int) -> int:
    n = len(m_S)
    x, z = popcount(X), popcount(Z)
    return sum(m_S[s] for s in members(X)) + sum(m_T[t] for t in members(Z)) - x * z + (n - x - z + k)


def check_k_elementary_degrees(
    m_S: Sequence[int], m_T: Sequence[int], k: int, witness: bool = True
) -> FeasibilityVerdict:
    """Existence of a simple k-elementary bigraph with side degrees
    ``(m_S, m_T)``.

    A feasible verdict carries a :class:`BipartiteInstance` witness whose
    ``matching`` pairs the i-th smallest ``m_S`` node with the i-th largest
    ``m_T`` node.
    """
    m_S, m_T = tuple(int(x) for x in m_S), tuple(int(x) for x in m_T)
    n = len(m_S)
    if len(m_T) != n:
        raise InputError("both sides must have the same size")
    if min(m_S + m_T, default=0) < 0:
        raise InputError("side degrees must be non-negative")
    if sum(m_S) != sum(m_T):
        raise InputError("spec totals mismatch: sum(m_S) != sum(m_T)")
    if not 1 <= k <= n - 1:
        raise PreconditionError(f"k must lie in [1, n-1] (k={k}, n={n})")
    gate = _gale_ryser(m_S, m_T)
    if not gate:
        return gate
    gamma = sum(m_S)
    xs = prefix_masks(sorted(range(n), key=lambda v: (-m_S[v], v)))[:n]
    zs = prefix_masks(sorted(range(n), key=lambda v: (-m_T[v], v)))[:n]
    for X in xs:
        for Z in zs:
            lhs = elementary_lhs(m_S, m_T, X, Z, k)
            if lhs > gamma:
                return FeasibilityVerdict.violated("elementary", lhs, gamma, X=members(X), Z=members(Z), k=k)
    if not witness:
        return FeasibilityVerdict.ok()
    return FeasibilityVerdict.ok(_realize(m_S, m_T, k))


def shifted_spec(m_S: Sequence[int], m_T: Sequence[int]) -> tuple[DegreeSpec, list[int], list[int]]:
    """Digraph degree spec of the reduction: ``v_j`` pairs the j-th smallest
    ``m_S`` node with the j-th largest ``m_T`` node."""
    n = len(m_S)
    s_order = sorted(range(n), key=lambda v: (m_S[v], v))
    t_order = sorted(range(n), key=lambda v: (-m_T[v], v))
    m_o = tuple(m_T[t_order[j]] - 1 for j in range(n))
    m_i = tuple(m_S[s_order[j]] - 1 for j in range(n))
    return DegreeSpec(m_o, m_i), s_order, t_order


def _realize(m_S, m_T, k) -> BipartiteInstance:
    n = len(m_S)
    try:
        spec, s_order, t_order = shifted_spec(m_S, m_T)
    except InputError as exc:
        raise InvariantViolation(f"feasible side spec has a degree below 1: {exc}") from exc
    result = construct_witness(AugmentInstance(Digraph(n), spec, k))
    if not result.feasible:
        raise InvariantViolation("side spec feasible but the shifted digraph spec is not")
    matching = [(s_order[j], t_order[j]) for j in range(n)]
    edges = matching + [(s_order[h], t_order[j]) for j, h in result.digraph.arcs]
    inst = BipartiteInstance(n, tuple(edges), m_S, m_T, matching=tuple(matching))
    if not inst.fits() or not is_k_elementary(inst, k):
        raise InvariantViolation("bigraph witness fails its audit")
    return inst


def reduction_verdict(m_S: Sequence[int], m_T: Sequence[int], k: int) -> bool:
    """Gale-Ryser gate followed by the k-connected digraph check on the
    shifted spec."""
    if not _gale_ryser(tuple(m_S), tuple(m_T)):
        return False
    if min(m_S, default=0) < 1 or min(m_T, default=0) < 1:
        return False
    spec, _, _ = shifted_spec(m_S, m_T)
    return check_k_connected_degree_sequence(spec, k).feasible


def recheck_bipartite_certificate(verdict: FeasibilityVerdict, m_S, m_T) -> tuple[int, int]:
    n = len(m_S)
    gamma = sum(m_S)
    X, Z = to_mask(verdict.certificate.get("X") or []), to_mask(verdict.certificate.get("Z") or [])
    if verdict.condition == "gale-ryser":
        lhs = sum(m_S[s] for s in members(X)) + sum(m_T[t] for t in members(Z)) - popcount(X) * popcount(Z)
    elif verdict.condition == "elementary":
        if X == full_mask(n) or Z == full_mask(n):
            raise InvariantViolation("elementary certificate: X and Z must be proper")
        lhs = elementary_lhs(m_S, m_T, X, Z, int(verdict.certificate["k"]))
    else:
        raise InvariantViolation(f"unknown condition {verdict.condition!r}")
    if lhs <= gamma or (verdict.lhs, verdict.rhs) != (lhs, gamma):
        raise InvariantViolation(f"{verdict.condition} certificate does not re-evaluate as a violation")
    return lhs, gamma
