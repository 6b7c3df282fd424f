"""Feasibility checkers for degree-specified realization and augmentation.

Every checker returns a :class:`FeasibilityVerdict`.  Infeasible verdicts
name the violated inequality and carry the sets that instantiate it, in a
form :func:`recheck_certificate` can re-evaluate from digraph and degree
primitives alone.

Condition names:

* ``simple``       ``m_i(X) + m_o(Z) - |X||Z| + |X & Z| <= gamma``
* ``strong``       ``m_o(Z) + m_i(X) - |X||Z| + 1 <= gamma``, X, Z disjoint
  proper subsets, not both empty
* ``cover``        as ``strong`` with a member ``K``, ``Z <= K <= V - X``
* ``edge-in`` / ``edge-out``  ``k <= m_i(X) + rho_0(X)`` (resp. out)
* ``loopless``     ``m_i(v) + m_o(v) <= gamma``
* ``node-family``  ``p1(F) + m_o(Z) + m_i(X) - d_avail(Z, X) <= gamma``
* ``point-in`` / ``point-out``  ``k <= rho_0(v) + m_i(v)`` (resp. out)
* ``family-in`` / ``family-out``  ``p1(F) <= m_i(Z)`` (resp. ``m_o(Z)``)
* ``avail``        ``m_o(Z) + m_i(X) - d_avail(Z, X) <= gamma``
* ``source-in`` / ``sink-out``  ``1 <= m_i(K)`` / ``1 <= m_o(V - K)``
* ``unreachable``  ``m_o(Z) + m_i(X) - d_avail(Z, X) + 1 <= gamma``
* ``kcon``         ``m_i(X) + m_o(Z) - |X||Z| + k <= gamma``, X != Z proper
  subsets with ``|X & Z| < k``
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .bisets import (
    BiSet,
    best_family,
    family_p1,
    is_independent_family,
    oneway_candidates,
)
from .connectivity import edge_connectivity, is_k_connected, reach_masks
from .digraph import (
    DegreeSpec,
    Digraph,
    full_mask,
    members,
    popcount,
    star_graph,
    to_mask,
)
from .errors import CapExceeded, InputError, InvariantViolation, PreconditionError
from .realize import loopless_condition, prefix_masks, prefix_orders, simple_realizable
from .verdict import FeasibilityVerdict

PAIR_SCAN_CAP = 10
DISJOINT_SCAN_CAP = 12
FAMILY_CHECK_CAP = 6

MODES = ("edge", "node")
SIMPLICITIES = ("augmenting_simple", "augmented_simple", "loopless", "any")


@dataclass
class AugmentInstance:
    """A starting digraph, a degree spec for the arcs to add and a target."""

    D0: Digraph
    spec: DegreeSpec
    k: int
    mode: str = "node"
    simplicity: str = "augmented_simple"
    F0: tuple[tuple[int, int], ...] | None = None
    family: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.D0.n != self.spec.n:
            raise InputError(f"D0 has {self.D0.n} nodes but the spec has {self.spec.n}")
        if self.mode not in MODES:
            raise InputError(f"unknown mode {self.mode!r}")
        if self.simplicity not in SIMPLICITIES:
            raise InputError(f"unknown simplicity {self.simplicity!r}")
        if self.k < 0:
            raise InputError("k must be non-negative")
        if self.mode == "node":
            if self.k > self.spec.n - 1:
                raise InputError(f"node mode needs k <= n-1 (k={self.k}, n={self.spec.n})")
            if self.simplicity in ("augmented_simple", "augmenting_simple") and not self.D0.is_simple:
                raise InputError("node mode needs a simple D0")
        if self.F0 is not None:
            if self.simplicity != "augmenting_simple":
                raise InputError("F0 applies only with simplicity 'augmenting_simple'")
            self.F0 = tuple(sorted((int(u), int(v)) for u, v in self.F0))
            arcs = set(self.D0.arcs)
            if any(a not in arcs for a in self.F0):
                raise InputError("F0 must be a subset of the arcs of D0")


def _guard(what: str, n: int, cap: int) -> None:
    if n > cap:
        raise CapExceeded(what, n, cap)


def _need_simple(spec: DegreeSpec) -> FeasibilityVerdict | None:
    verdict = simple_realizable(spec)
    return None if verdict.feasible else verdict


# -- simple strongly connected realization -----------------------------------


def _strong_lhs(spec: DegreeSpec, X: int, Z: int) -> int:
    return spec.out_sum(Z) + spec.in_sum(X) - popcount(X) * popcount(Z) + 1


def _split_overlap(spec: DegreeSpec, X: int, Z: int) -> tuple[int, int]:
    """Make prefixes disjoint, dropping each shared node from the side
    where it costs the left-hand side less."""
    for v in members(X & Z):
        # dropping v from X changes lhs by |Z| - m_i(v); from Z by |X| - m_o(v)
        if popcount(Z) - spec.m_i[v] >= popcount(X) - spec.m_o[v]:
            X &= ~(1 << v)
        else:
            Z &= ~(1 << v)
    return X, Z


def _strong_pairs_prefix(spec: DegreeSpec):
    n = spec.n
    by_in, by_out = prefix_orders(spec)
    xs, zs = prefix_masks(by_in), prefix_masks(by_out)
    for h in range(n):
        for j in range(min(n - h, n - 1) + 1):
            if h + j == 0:
                continue
            X, Z = xs[h], zs[j]
            if X & Z:
                X, Z = _split_overlap(spec, X, Z)
                if X | Z == 0:
                    continue
            yield X, Z


def _strong_pairs_exhaustive(n: int):
    V = full_mask(n)
    for X in range(V):
        rest = V & ~X
        Z = rest
        while True:
            if (X | Z) and Z != V:
                yield X, Z
            if Z == 0:
                break
            Z = (Z - 1) & rest


def check_strong_simple(spec: DegreeSpec, method: str = "auto") -> FeasibilityVerdict:
    """Existence of a strongly connected simple digraph fitting ``spec``.

    ``method``: ``"prefix"`` scans prefix pairs made disjoint, ``"exhaustive"``
    scans all disjoint pairs, ``"auto"`` runs the exhaustive scan up to
    ``n = 12`` and reports a prefix certificate when one exists.
    """
    pre = _need_simple(spec)
    if pre is not None:
        return pre
    n, gamma = spec.n, spec.gamma
    if method not in ("auto", "prefix", "exhaustive"):
        raise InputError(f"unknown method {method!r}")

    def scan(pairs):
        for X, Z in pairs:
            lhs = _strong_lhs(spec, X, Z)
            if lhs > gamma:
                return FeasibilityVerdict.violated("strong", lhs, gamma, X=members(X), Z=members(Z))
        return FeasibilityVerdict.ok()

    if method == "prefix" or (method == "auto" and n > DISJOINT_SCAN_CAP):
        return scan(_strong_pairs_prefix(spec))
    if method == "exhaustive":
        _guard("disjoint pair scan", n, DISJOINT_SCAN_CAP)
        return scan(_strong_pairs_exhaustive(n))
    full = scan(_strong_pairs_exhaustive(n))
    if full.feasible:
        return full
    prefix = scan(_strong_pairs_prefix(spec))
    return full if prefix.feasible else prefix


# -- covering a crossing family ----------------------------------------------


def is_crossing_family(family: Iterable[int], n: int) -> bool:
    members_ = set(family)
    V = full_mask(n)
    for A in members_:
        for B in members_:
            crossing = A & B and (A | B) != V and A & ~B and B & ~A
            if crossing and ((A & B) not in members_ or (A | B) not in members_):
                return False
    return True


def _cover_pairs(spec: DegreeSpec, K: int):
    n = spec.n
    inside = sorted(members(K), key=lambda v: (-spec.m_o[v], v))
    outside = sorted(members(full_mask(n) & ~K), key=lambda v: (-spec.m_i[v], v))
    zs = prefix_masks(inside)
    xs = prefix_masks(outside)
    for Z in zs:
        for X in xs:
            yield X, Z


def check_cover_crossing_family(spec: DegreeSpec, family: Iterable[int]) -> FeasibilityVerdict:
    """Existence of a simple digraph fitting ``spec`` that enters every
    member of the crossing family (node-set bitmasks)."""
    n, gamma = spec.n, spec.gamma
    V = full_mask(n)
    family = sorted(set(family))
    for K in family:
        if K == 0 or K == V or K & ~V:
            raise InputError("family members must be non-empty proper subsets")
    if not is_crossing_family(family, n):
        raise InputError("family is not crossing")
    pre = _need_simple(spec)
    if pre is not None:
        return pre
    for K in family:
        for X, Z in _cover_pairs(spec, K):
            lhs = _strong_lhs(spec, X, Z)
            if lhs > gamma:
                return FeasibilityVerdict.violated(
                    "cover", lhs, gamma, X=members(X), Z=members(Z), K=members(K)
                )
    return FeasibilityVerdict.ok()


# -- edge-connectivity augmentation ------------------------------------------


def tight_sets(D0: Digraph, value: int) -> list[int]:
    """All ``0 < K < V`` with ``rho_0(K) == value``."""
    return [K for K in range(1, D0.V) if D0.in_degree_set(K) == value]


def check_edge_augment_plus_one(D0: Digraph, spec: DegreeSpec, k: int) -> FeasibilityVerdict:
    """Make a ``(k-1)``-edge-connected ``D0`` k-edge-connected by adding a
    simple digraph fitting ``spec``."""
    if D0.n != spec.n:
        raise InputError("D0 and spec disagree on the node count")
    if k < 1:
        raise InputError("k must be at least 1")
    if D0.n >= 2 and edge_connectivity(D0) < k - 1:
        raise PreconditionError(f"D0 is not {k - 1}-edge-connected")
    return check_cover_crossing_family(spec, tight_sets(D0, k - 1))


def check_edge_augment_multigraph(
    D0: Digraph, spec: DegreeSpec, k: int, loopless: bool = False
) -> FeasibilityVerdict:
    """Make ``D0`` k-edge-connected by adding any digraph fitting ``spec``
    (loopless when asked)."""
    if D0.n != spec.n:
        raise InputError("D0 and spec disagree on the node count")
    if loopless:
        verdict = loopless_condition(spec)
        if not verdict:
            return verdict
    if k <= 0:
        return FeasibilityVerdict.ok()
    for X in range(1, D0.V):
        have = spec.in_sum(X) + D0.in_degree_set(X)
        if have < k:
            return FeasibilityVerdict.violated("edge-in", k, have, X=members(X))
        have = spec.out_sum(X) + D0.out_degree_set(X)
        if have < k:
            return FeasibilityVerdict.violated("edge-out", k, have, X=members(X))
    return FeasibilityVerdict.ok()


# -- node-connectivity augmentation ------------------------------------------


def available_arcs(n: int, Z: int, X: int, forbidden: Digraph) -> int:
    """Non-loop pairs ``zx`` (``z`` in Z, ``x`` in X) that are not arcs of
    ``forbidden``."""
    return popcount(Z) * popcount(X) - popcount(Z & X) - forbidden.d_between(Z, X)


def _forbidden(inst: AugmentInstance) -> Digraph:
    if inst.F0 is None:
        return inst.D0
    return Digraph(inst.D0.n, inst.F0)


def check_node_augment_simple(
    inst: AugmentInstance, cap: int = FAMILY_CHECK_CAP
) -> FeasibilityVerdict:
    """Make a simple ``D0`` k-connected by adding ``D`` fitting the spec with
    ``D0 + D`` simple; with ``F0`` set, ``D`` must be simple and avoid the
    arcs of ``F0`` only."""
    D0, spec, k = inst.D0, inst.spec, inst.k
    n, gamma = spec.n, spec.gamma
    if not D0.is_simple:
        raise InputError("D0 must be simple")
    if not 0 <= k <= n - 1:
        raise InputError(f"k must lie in [0, n-1] (k={k}, n={n})")
    _guard("node augmentation check", n, min(cap, PAIR_SCAN_CAP))
    forbidden = _forbidden(inst)
    V = full_mask(n)
    cands = oneway_candidates(D0, k)
    index = {b: i for i, b in enumerate(cands)}
    total_weight = sum(k - b.wall_size for b in cands)
    memo: dict[int, tuple[int, list[BiSet]]] = {}

    def best(X: int, Z: int) -> tuple[int, list[BiSet]]:
        chosen = [b for b in cands if not (Z & ~b.outer) and not (X & b.inner)]
        key = 0
        for b in chosen:
            key |= 1 << index[b]
        got = memo.get(key)
        if got is None:
            got = memo[key] = best_family(chosen, k, n)
        return got

    for X in range(V + 1):
        for Z in range(V + 1):
            base = spec.out_sum(Z) + spec.in_sum(X) - available_arcs(n, Z, X, forbidden)
            if base + total_weight <= gamma:
                continue
            value, fam = best(X, Z) if k > 0 else (0, [])
            lhs = value + base
            if lhs > gamma:
                return FeasibilityVerdict.violated(
                    "node-family",
                    lhs,
                    gamma,
                    X=members(X),
                    Z=members(Z),
                    family=[b.to_json() for b in fam],
                )
    return FeasibilityVerdict.ok()


def check_node_augment_multigraph(
    inst: AugmentInstance, cap: int = FAMILY_CHECK_CAP
) -> FeasibilityVerdict:
    """Make ``D0`` k-connected by adding any digraph fitting the spec;
    loopless when ``inst.simplicity == "loopless"``."""
    D0, spec, k = inst.D0.collapse(), inst.spec, inst.k
    n = spec.n
    if not 0 <= k <= n - 1:
        raise InputError(f"k must lie in [0, n-1] (k={k}, n={n})")
    _guard("node augmentation check", n, cap)
    if inst.simplicity == "loopless":
        verdict = loopless_condition(spec)
        if not verdict:
            return verdict
    for v in range(n):
        have = D0.in_degree(v) + spec.m_i[v]
        if have < k:
            return FeasibilityVerdict.violated("point-in", k, have, v=v)
        have = D0.out_degree(v) + spec.m_o[v]
        if have < k:
            return FeasibilityVerdict.violated("point-out", k, have, v=v)
    if k == 0:
        return FeasibilityVerdict.ok()
    cands = oneway_candidates(D0, k)
    V = full_mask(n)
    for Z in range(V + 1):
        inside = [b for b in cands if not (b.inner & ~Z)]
        value, fam = best_family(inside, k, n)
        if value > spec.in_sum(Z):
            return FeasibilityVerdict.violated(
                "family-in", value, spec.in_sum(Z), Z=members(Z), family=[b.to_json() for b in fam]
            )
        covering = [b for b in cands if (b.outer | Z) == V]
        value, fam = best_family(covering, k, n)
        if value > spec.out_sum(Z):
            return FeasibilityVerdict.violated(
                "family-out", value, spec.out_sum(Z), Z=members(Z), family=[b.to_json() for b in fam]
            )
    return FeasibilityVerdict.ok()


def check_strong_augment_simple(D0: Digraph, spec: DegreeSpec) -> FeasibilityVerdict:
    """Make a simple ``D0`` strongly connected by adding ``D`` fitting the
    spec with ``D0 + D`` simple."""
    if D0.n != spec.n:
        raise InputError("D0 and spec disagree on the node count")
    if not D0.is_simple:
        raise InputError("D0 must be simple")
    n, gamma = spec.n, spec.gamma
    _guard("pair scan", n, PAIR_SCAN_CAP)
    V = full_mask(n)
    for X in range(V + 1):
        for Z in range(V + 1):
            lhs = spec.out_sum(Z) + spec.in_sum(X) - available_arcs(n, Z, X, D0)
            if lhs > gamma:
                return FeasibilityVerdict.violated("avail", lhs, gamma, X=members(X), Z=members(Z))
    for K in range(1, V):
        if D0.in_degree_set(K) == 0:
            if spec.in_sum(K) < 1:
                return FeasibilityVerdict.violated("source-in", 1, spec.in_sum(K), K=members(K))
            if spec.out_sum(V & ~K) < 1:
                return FeasibilityVerdict.violated("sink-out", 1, spec.out_sum(V & ~K), K=members(K))
    reach = reach_masks(D0)
    for X in range(1, V):
        reach_X = 0
        for x in members(X):
            reach_X |= reach[x]
        rest = V & ~X & ~reach_X
        Z = rest
        while Z:
            lhs = spec.out_sum(Z) + spec.in_sum(X) - available_arcs(n, Z, X, D0) + 1
            if lhs > gamma:
                return FeasibilityVerdict.violated(
                    "unreachable", lhs, gamma, X=members(X), Z=members(Z)
                )
            Z = (Z - 1) & rest
    return FeasibilityVerdict.ok()


def check_k_connected_degree_sequence(spec: DegreeSpec, k: int) -> FeasibilityVerdict:
    """Existence of a simple k-connected digraph fitting ``spec``."""
    n, gamma = spec.n, spec.gamma
    pre = _need_simple(spec)
    if pre is not None:
        return pre
    if not 1 <= k <= n - 1:
        raise PreconditionError(f"k must lie in [1, n-1] (k={k}, n={n})")
    by_in, by_out = prefix_orders(spec)
    xs, zs = prefix_masks(by_in)[:n], prefix_masks(by_out)[:n]
    for X in xs:
        for Z in zs:
            if X == Z or popcount(X & Z) >= k:
                continue
            lhs = spec.in_sum(X) + spec.out_sum(Z) - popcount(X) * popcount(Z) + k
            if lhs > gamma:
                return FeasibilityVerdict.violated("kcon", lhs, gamma, X=members(X), Z=members(Z), k=k)
    return FeasibilityVerdict.ok()


# -- certificate re-evaluation -----------------------------------------------


def _mask(cert: dict, key: str) -> int:
    return to_mask(cert.get(key) or [])


def _family(cert: dict) -> list[BiSet]:
    return [BiSet.from_json(b) for b in cert.get("family") or []]


def recheck_certificate(
    verdict: FeasibilityVerdict,
    spec: DegreeSpec,
    D0: Digraph | None = None,
    k: int | None = None,
    F0: Sequence[tuple[int, int]] | None = None,
    family: Iterable[int] | None = None,
) -> tuple[int, int]:
    """Recompute ``(lhs, rhs)`` of an infeasibility certificate from
    primitives, validating its structural side conditions.

    Raises :class:`InvariantViolation` when the certificate is malformed
    or does not re-evaluate to the recorded sides with ``lhs > rhs``.
    """
    n, gamma = spec.n, spec.gamma
    D0 = D0 if D0 is not None else Digraph(n)
    V = full_mask(n)
    cert = verdict.certificate
    cond = verdict.condition
    X, Z = _mask(cert, "X"), _mask(cert, "Z")
    if X & ~V or Z & ~V:
        raise InvariantViolation("certificate sets leave the node range")

    def need(ok: bool, why: str) -> None:
        if not ok:
            raise InvariantViolation(f"{cond} certificate: {why}")

    if cond == "simple":
        lhs, rhs = spec.in_sum(X) + spec.out_sum(Z) - popcount(X) * popcount(Z) + popcount(X & Z), gamma
    elif cond in ("strong", "cover"):
        need(not X & Z, "X and Z must be disjoint")
        if cond == "strong":
            need((X | Z) != 0, "X and Z must not both be empty")
            need(X != V and Z != V, "X and Z must be proper subsets")
        else:
            K = _mask(cert, "K")
            need(K not in (0, V), "K must be a non-empty proper subset")
            need(not Z & ~K and not X & K, "need Z <= K <= V - X")
            if family is not None:
                need(K in set(family), "K is not a family member")
        lhs, rhs = _strong_lhs(spec, X, Z), gamma
    elif cond in ("edge-in", "edge-out"):
        need(X not in (0, V), "X must be a non-empty proper subset")
        need(k is not None, "k is required")
        if cond == "edge-in":
            lhs, rhs = k, spec.in_sum(X) + D0.in_degree_set(X)
        else:
            lhs, rhs = k, spec.out_sum(X) + D0.out_degree_set(X)
    elif cond == "loopless":
        v = int(cert["v"])
        lhs, rhs = spec.m_i[v] + spec.m_o[v], gamma
    elif cond in ("point-in", "point-out"):
        v = int(cert["v"])
        simple = D0.collapse()
        have = simple.in_degree(v) + spec.m_i[v] if cond == "point-in" else simple.out_degree(v) + spec.m_o[v]
        lhs, rhs = k, have
    elif cond in ("node-family", "family-in", "family-out"):
        need(k is not None, "k is required")
        fam = _family(cert)
        base = D0.collapse()
        need(is_independent_family(fam, n), "family is not independent")
        need(all(not b.is_trivial(n) for b in fam), "family has a trivial bi-set")
        if cond == "node-family":
            host = base + star_graph(n, Z, X)
            need(all(host.d_between(V & ~b.outer, b.inner) == 0 for b in fam), "bi-set not one-way")
            forbidden = base if F0 is None else Digraph(n, F0)
            lhs = family_p1(fam, k) + spec.out_sum(Z) + spec.in_sum(X) - available_arcs(n, Z, X, forbidden)
            rhs = gamma
        else:
            need(all(base.d_between(V & ~b.outer, b.inner) == 0 for b in fam), "bi-set not one-way")
            if cond == "family-in":
                need(all(not b.inner & ~Z for b in fam), "inner sets must lie in Z")
                lhs, rhs = family_p1(fam, k), spec.in_sum(Z)
            else:
                need(all((b.outer | Z) == V for b in fam), "outer sets must cover V - Z")
                lhs, rhs = family_p1(fam, k), spec.out_sum(Z)
    elif cond == "avail":
        lhs, rhs = spec.out_sum(Z) + spec.in_sum(X) - available_arcs(n, Z, X, D0), gamma
    elif cond in ("source-in", "sink-out"):
        K = _mask(cert, "K")
        need(K not in (0, V) and D0.in_degree_set(K) == 0, "K must be a proper set no D0 arc enters")
        lhs, rhs = 1, spec.in_sum(K) if cond == "source-in" else spec.out_sum(V & ~K)
    elif cond == "unreachable":
        need(X != 0 and Z != 0 and not X & Z, "X, Z must be disjoint and non-empty")
        reach = reach_masks(D0)
        need(all(not reach[x] & Z for x in members(X)), "Z is reachable from X in D0")
        lhs, rhs = spec.out_sum(Z) + spec.in_sum(X) - available_arcs(n, Z, X, D0) + 1, gamma
    elif cond == "kcon":
        kk = int(cert.get("k", k))
        need(X != V and Z != V, "X and Z must be proper subsets")
        need(X != Z and popcount(X & Z) < kk, "need X != Z and |X & Z| < k")
        lhs, rhs = spec.in_sum(X) + spec.out_sum(Z) - popcount(X) * popcount(Z) + kk, gamma
    else:
        raise InvariantViolation(f"unknown condition {cond!r}")
    need(lhs > rhs, f"recomputed sides {lhs} <= {rhs} do not violate")
    if verdict.lhs is not None and (verdict.lhs, verdict.rhs) != (lhs, rhs):
        raise InvariantViolation(
            f"{cond} certificate: recorded sides ({verdict.lhs}, {verdict.rhs}) != recomputed ({lhs}, {rhs})"
        )
    return lhs, rhs


def is_feasible_target(inst: AugmentInstance, D: Digraph) -> bool:
    """Audit: ``D`` fits the spec, respects the simplicity mode and
    ``D0 + D`` reaches the connectivity target."""
    if not inst.spec.fits(D):
        return False
    total = inst.D0 + D
    if inst.simplicity == "augmented_simple" and not total.is_simple:
        return False
    if inst.simplicity == "augmenting_simple":
        if not D.is_simple:
            return False
        avoid = set(inst.F0 or ())
        if any(a in avoid for a in D.arcs):
            return False
    if inst.simplicity == "loopless" and D.loop_count:
        return False
    if inst.mode == "node":
        return is_k_connected(total.collapse(), inst.k)
    return total.n < 2 or inst.k <= 0 or edge_connectivity(total) >= inst.k


def check_instance(inst: AugmentInstance, cap: int = FAMILY_CHECK_CAP) -> FeasibilityVerdict:
    """Dispatch an instance to the checker that characterizes it."""
    D0, spec, k = inst.D0, inst.spec, inst.k
    if inst.mode == "edge":
        if inst.simplicity in ("any", "loopless"):
            return check_edge_augment_multigraph(D0, spec, k, inst.simplicity == "loopless")
        if inst.simplicity == "augmenting_simple" and not inst.F0:
            if k == 0:
                return simple_realizable(spec)
            return check_edge_augment_plus_one(D0, spec, k)
        raise InputError(f"no characterization for edge mode with simplicity {inst.simplicity!r}")
    if inst.simplicity in ("any", "loopless"):
        return check_node_augment_multigraph(inst, cap)
    if inst.simplicity == "augmented_simple":
        if len(D0) == 0 and k >= 1:
            return check_k_connected_degree_sequence(spec, k)
        if k == 1:
            return check_strong_augment_simple(D0, spec)
    if inst.simplicity == "augmenting_simple" and inst.F0 is None:
        inst = AugmentInstance(D0, spec, k, inst.mode, inst.simplicity, F0=())
    return check_node_augment_simple(inst, cap)
