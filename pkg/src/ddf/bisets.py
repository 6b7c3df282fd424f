"""Bi-sets, independence, one-way families and the p-functions.

A bi-set is a nested pair ``inner <= outer`` of node sets.  An arc ``uv``
covers it when ``u`` lies outside ``outer`` and ``v`` inside ``inner``; two
bi-sets are independent when no arc can cover both.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import NamedTuple

from .digraph import DegreeSpec, Digraph, full_mask, members, popcount, subsets, to_mask
from .errors import CapExceeded, InputError

FAMILY_SEARCH_CAP = 10


@dataclass(frozen=True, order=True)
class BiSet:
    """``(outer, inner)`` as bitmasks; ``inner`` must be contained in ``outer``."""

    outer: int
    inner: int

    def __post_init__(self):
        if self.inner & ~self.outer:
            raise InputError("inner set of a bi-set must be contained in its outer set")

    @classmethod
    def of(cls, outer: Iterable[int], inner: Iterable[int]) -> BiSet:
        return cls(to_mask(outer), to_mask(inner))

    @property
    def wall(self) -> int:
        return self.outer & ~self.inner

    @property
    def wall_size(self) -> int:
        return popcount(self.outer) - popcount(self.inner)

    def is_trivial(self, n: int) -> bool:
        return self.inner == 0 or self.outer == full_mask(n)

    def to_json(self) -> dict:
        return {"outer": members(self.outer), "inner": members(self.inner)}

    @classmethod
    def from_json(cls, data: dict) -> BiSet:
        return cls.of(data["outer"], data["inner"])


def meet(b: BiSet, c: BiSet) -> BiSet:
    return BiSet(b.outer & c.outer, b.inner & c.inner)


def join(b: BiSet, c: BiSet) -> BiSet:
    return BiSet(b.outer | c.outer, b.inner | c.inner)


def comparable(b: BiSet, c: BiSet) -> bool:
    below = (b.inner & ~c.inner) == 0 and (b.outer & ~c.outer) == 0
    above = (c.inner & ~b.inner) == 0 and (c.outer & ~b.outer) == 0
    return below or above


def is_crossing(b: BiSet, c: BiSet, n: int) -> bool:
    return (
        (b.outer | c.outer) != full_mask(n)
        and (b.inner & c.inner) != 0
        and not comparable(b, c)
    )


def independent(b: BiSet, c: BiSet, n: int) -> bool:
    """Inner sets disjoint or outer sets co-disjoint."""
    return (b.inner & c.inner) == 0 or (b.outer | c.outer) == full_mask(n)


def is_independent_family(family: Sequence[BiSet], n: int) -> bool:
    return all(
        independent(family[i], family[j], n)
        for i in range(len(family))
        for j in range(i + 1, len(family))
    )


def arc_covers(arc: tuple[int, int], b: BiSet) -> bool:
    u, v = arc
    return not (b.outer >> u) & 1 and bool((b.inner >> v) & 1)


def in_degree(g: Digraph, b: BiSet) -> int:
    return g.d_between(g.V & ~b.outer, b.inner)


def is_oneway(g: Digraph, b: BiSet) -> bool:
    return in_degree(g, b) == 0


# -- p-functions --------------------------------------------------------------


class PValue(NamedTuple):
    p1: int
    p2: int
    p3: int
    p: int


class PFunctionContext:
    """Starting digraph, degree spec and target ``k`` for the p-functions.

    ``f0`` restricts which starting arcs define the closed neighbourhoods;
    by default every arc of ``D0`` does.
    """

    def __init__(self, D0: Digraph, spec: DegreeSpec, k: int, f0: Iterable[tuple[int, int]] | None = None):
        if D0.n != spec.n:
            raise InputError("digraph and spec disagree on the node count")
        if not D0.is_simple:
            raise InputError("the starting digraph must be simple")
        self.D0 = D0
        self.spec = spec
        self.k = k
        self.n = D0.n
        arcs = D0.arcs if f0 is None else [tuple(a) for a in f0]
        n_plus = [1 << u for u in range(self.n)]
        n_minus = [1 << u for u in range(self.n)]
        for u, v in arcs:
            n_plus[u] |= 1 << v
            n_minus[v] |= 1 << u
        self.N_plus = tuple(n_plus)
        self.N_minus = tuple(n_minus)


def p_value(ctx: PFunctionContext, b: BiSet) -> PValue:
    """All three components and their positive-part maximum."""
    n = ctx.n
    if b.is_trivial(n):
        raise InputError("p is defined on non-trivial bi-sets only")
    V = full_mask(n)
    p1 = ctx.k - b.wall_size
    p2 = 0
    comp = V & ~b.outer
    if popcount(comp) == 1:
        u = comp.bit_length() - 1
        if b.inner == V & ~ctx.N_plus[u]:
            p2 = ctx.spec.m_o[u]
    p3 = 0
    if popcount(b.inner) == 1:
        v = b.inner.bit_length() - 1
        p3 = ctx.spec.m_i[v] + popcount(ctx.N_minus[v]) - popcount(b.outer)
    return PValue(p1, p2, p3, max(p1, p2, p3, 0))


# -- independent family search ------------------------------------------------


def max_weight_independent(
    weights: Sequence[int],
    compatible: Sequence[int],
    cliques: Sequence[Sequence[int]] | None = None,
) -> tuple[int, int]:
    """Exact maximum-weight pairwise-compatible subset by branch and bound.

    ``compatible[i]`` is the bitmask of items that may be chosen together
    with item ``i``.  ``cliques`` optionally lists groups of pairwise
    incompatible items covering every item; they feed a fractional upper
    bound that is much tighter than greedy colouring on arc-cover families.
    Items are branched in index order, include first, and only strict
    improvements replace the incumbent, so the returned set is the first
    optimum in that order.  Returns ``(value, chosen_mask)``.
    """
    m = len(weights)
    order = sorted(range(m), key=lambda i: -weights[i])
    best = [0, 0]
    bound_cache: dict[int, float] = {}
    ranked = []
    if cliques:
        count = [0] * m
        for group in cliques:
            for i in group:
                count[i] += 1
        ratio = [weights[i] / count[i] if count[i] else float("inf") for i in range(m)]
        ranked = [sorted(group, key=lambda i: -ratio[i]) for group in cliques if group]

    def colour_bound(cand: int) -> int:
        # at most one item per class of pairwise-incompatible items
        classes: list[int] = []
        total = 0
        for i in order:
            if not (cand >> i) & 1:
                continue
            for c in range(len(classes)):
                if classes[c] & compatible[i] == 0:
                    classes[c] |= 1 << i
                    break
            else:
                classes.append(1 << i)
                total += weights[i]
        return total

    def clique_bound(cand: int) -> float:
        total = 0.0
        for group in ranked:
            for i in group:
                if (cand >> i) & 1:
                    total += ratio[i]
                    break
        return total

    def bound(cand: int) -> float:
        got = bound_cache.get(cand)
        if got is None:
            got = colour_bound(cand)
            if ranked:
                got = min(got, int(clique_bound(cand) + 1e-9))
            bound_cache[cand] = got
        return got

    def search(cand: int, value: int, chosen: int) -> None:
        if cand == 0:
            if value > best[0]:
                best[0], best[1] = value, chosen
            return
        if value + bound(cand) <= best[0]:
            return
        low = cand & -cand
        i = low.bit_length() - 1
        search(cand & compatible[i], value + weights[i], chosen | low)
        search(cand & ~low, value, chosen)

    search(full_mask(m), 0, 0)
    return best[0], best[1]


def oneway_candidates(
    g: Digraph,
    k: int,
    *,
    outer_contains: int = 0,
    inner_avoids: int = 0,
    inner_within: int | None = None,
    outer_covers: int | None = None,
) -> list[BiSet]:
    """Non-trivial ``g``-one-way bi-sets with ``k - w(B) > 0`` meeting the
    side constraints, in lexicographic ``(inner, outer)`` order.

    ``outer_covers=Z`` demands ``outer | Z == V``.
    """
    n = g.n
    V = full_mask(n)
    allowed_inner = V & ~inner_avoids
    if inner_within is not None:
        allowed_inner &= inner_within
    must_outer = outer_contains
    if outer_covers is not None:
        must_outer |= V & ~outer_covers
    out: list[BiSet] = []
    for inner in range(1, V + 1):
        if inner & ~allowed_inner:
            continue
        tails = 0
        for v in members(inner):
            tails |= g.in_neighbors(v)
        required = (tails | must_outer) & ~inner
        base = popcount(required)
        if base >= k:
            continue
        optional = V & ~inner & ~required
        for extra in subsets(optional):
            wall = required | extra
            w = base + popcount(extra)
            outer = inner | wall
            if w < k and outer != V:
                out.append(BiSet(outer, inner))
    out.sort(key=lambda b: (b.inner, b.outer))
    return out


def max_p1_independent(
    g: Digraph,
    k: int,
    *,
    cap: int = FAMILY_SEARCH_CAP,
    **constraints,
) -> tuple[int, list[BiSet]]:
    """Maximum of ``sum(k - w(B))`` over independent families of non-trivial
    ``g``-one-way bi-sets, with an attaining family.

    Keyword constraints are forwarded to :func:`oneway_candidates`.
    """
    if g.n > cap:
        raise CapExceeded("bi-set family search", g.n, cap)
    cands = oneway_candidates(g, k, **constraints)
    return best_family(cands, k, g.n)


def best_family(cands: Sequence[BiSet], k: int, n: int) -> tuple[int, list[BiSet]]:
    V = full_mask(n)
    weights = [k - b.wall_size for b in cands]
    compatible = []
    for b in cands:
        mask = 0
        for j, c in enumerate(cands):
            if (b.inner & c.inner) == 0 or (b.outer | c.outer) == V:
                mask |= 1 << j
        compatible.append(mask)
    # every ordered pair (u, v) is an arc; the bi-sets it covers are pairwise dependent
    cliques = []
    for u in range(n):
        for v in range(n):
            if u != v:
                cliques.append(
                    [j for j, c in enumerate(cands) if not (c.outer >> u) & 1 and (c.inner >> v) & 1]
                )
    value, chosen = max_weight_independent(weights, compatible, cliques)
    return value, [cands[j] for j in range(len(cands)) if (chosen >> j) & 1]


def family_p1(family: Iterable[BiSet], k: int) -> int:
    return sum(k - b.wall_size for b in family)
