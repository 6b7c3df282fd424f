"""Degree-specified realization: subgraph fitting via flow, greedy
realization, loop reduction and the simple-realizability prefix test."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .connectivity import FlowNetwork
from .digraph import (
    DegreeSpec,
    Digraph,
    complete_digraph,
    full_mask,
    members,
    popcount,
    to_mask,
)
from .errors import InputError, InvariantViolation, PreconditionError
from .verdict import FeasibilityVerdict


@dataclass
class RealizationResult:
    feasible: bool
    digraph: Digraph | None = None
    condition: str | None = None
    certificate: dict[str, Any] = field(default_factory=dict)
    lhs: int | None = None
    rhs: int | None = None

    @classmethod
    def from_verdict(cls, verdict: FeasibilityVerdict) -> RealizationResult:
        return cls(False, None, verdict.condition, verdict.certificate, verdict.lhs, verdict.rhs)

    def to_json(self) -> dict:
        out: dict[str, Any] = {"feasible": self.feasible}
        if self.digraph is not None:
            out["arcs"] = self.digraph.to_json()
        if not self.feasible:
            out.update(condition=self.condition, certificate=self.certificate, lhs=self.lhs, rhs=self.rhs)
        return out


def _check_n(host: Digraph, spec: DegreeSpec) -> None:
    if host.n != spec.n:
        raise InputError(f"host has {host.n} nodes but the spec has {spec.n}")


def ore_realize(host: Digraph, spec: DegreeSpec) -> RealizationResult:
    """Find a subgraph of ``host`` fitting ``spec``, or a violating ``(X, Z)``.

    Tails and heads form the two sides of a transportation network whose
    middle capacities are the host arc multiplicities; a saturating flow is
    the subgraph, and a minimum cut yields ``m_i(X) + m_o(Z) - d(Z, X) > gamma``.
    """
    _check_n(host, spec)
    n = spec.n
    src, sink = 2 * n, 2 * n + 1
    net = FlowNetwork(2 * n + 2)
    for u in range(n):
        net.add_arc(src, u, spec.m_o[u])
        net.add_arc(n + u, sink, spec.m_i[u])
    mid = []
    for u in range(n):
        for v in range(n):
            m = host.multiplicity(u, v)
            if m:
                mid.append((u, v, net.add_arc(u, n + v, m)))
    value = net.max_flow(src, sink)
    gamma = spec.gamma
    if value == gamma:
        arcs = [(u, v) for u, v, e in mid for _ in range(net.flow_on(e))]
        return RealizationResult(True, Digraph(n, arcs))
    side = net.source_side(src)
    Z = to_mask(u for u in range(n) if u in side)
    X = full_mask(n) & ~to_mask(v for v in range(n) if n + v in side)
    lhs = spec.in_sum(X) + spec.out_sum(Z) - host.d_between(Z, X)
    if lhs <= gamma:
        raise InvariantViolation("min cut did not yield a violating pair")
    return RealizationResult(False, None, "ore", {"X": members(X), "Z": members(Z)}, lhs, gamma)


def greedy_realize(spec: DegreeSpec) -> Digraph:
    """Always-successful realization allowing loops and parallel arcs.

    Arcs are added one at a time, scanning ``(u, v)`` lexicographically and
    preferring ``u != v``.
    """
    n = spec.n
    out_left = list(spec.m_o)
    in_left = list(spec.m_i)
    arcs = []
    while True:
        pick = None
        for u in range(n):
            if out_left[u] == 0:
                continue
            for v in range(n):
                if v != u and in_left[v] > 0:
                    pick = (u, v)
                    break
            if pick:
                break
        if pick is None:
            for u in range(n):
                if out_left[u] > 0 and in_left[u] > 0:
                    pick = (u, u)
                    break
        if pick is None:
            break
        u, v = pick
        k = min(out_left[u], in_left[v]) if u != v else 1
        arcs.extend([pick] * k)
        out_left[u] -= k
        in_left[v] -= k
    return Digraph(n, arcs)


def loopless_condition(spec: DegreeSpec) -> FeasibilityVerdict:
    """``m_i(v) + m_o(v) <= gamma`` for every node."""
    for v in range(spec.n):
        lhs = spec.m_i[v] + spec.m_o[v]
        if lhs > spec.gamma:
            return FeasibilityVerdict.violated("loopless", lhs, spec.gamma, v=v)
    return FeasibilityVerdict.ok()


def loop_reduce_step(g: Digraph, v: int, f: tuple[int, int]) -> Digraph:
    """Replace the loop ``vv`` and the arc ``f = xy`` (``x != v != y``) by
    ``xv`` and ``vy``."""
    x, y = f
    if g.loops_at(v) == 0:
        raise InputError(f"no loop at node {v}")
    if x == v or y == v or g.multiplicity(x, y) == 0:
        raise InputError(f"arc {f} is not an arc avoiding node {v}")
    arcs = list(g.arcs)
    arcs.remove((v, v))
    arcs.remove((x, y))
    arcs += [(x, v), (v, y)]
    return Digraph(g.n, arcs)


def loop_reduce(g: Digraph) -> Digraph:
    """Eliminate all loops while keeping every node's in- and out-degree.

    Requires ``m_i(v) + m_o(v) <= gamma`` for the degrees of ``g``.
    """
    if not loopless_condition(g.degree_spec()):
        raise PreconditionError("degrees violate m_i(v) + m_o(v) <= gamma; loops are unavoidable")
    while g.loop_count:
        v = next(u for u in range(g.n) if g.loops_at(u))
        f = next(((x, y) for x, y in g.arcs if x != v and y != v), None)
        if f is None:
            raise InvariantViolation(f"no arc avoids node {v} although the loopless condition holds")
        g = loop_reduce_step(g, v, f)
    return g


def prefix_orders(spec: DegreeSpec) -> tuple[list[int], list[int]]:
    """Node orders for the 'h largest m_i' and 'j largest m_o' prefixes.

    Ties are broken by the other degree (descending) and then by index, so
    that equal-valued prefixes overlap as much as possible.
    """
    n = spec.n
    by_in = sorted(range(n), key=lambda v: (-spec.m_i[v], -spec.m_o[v], v))
    by_out = sorted(range(n), key=lambda v: (-spec.m_o[v], -spec.m_i[v], v))
    return by_in, by_out


def prefix_masks(order: list[int]) -> list[int]:
    masks = [0]
    for v in order:
        masks.append(masks[-1] | (1 << v))
    return masks


def _simple_lhs(spec: DegreeSpec, X: int, Z: int) -> int:
    return spec.in_sum(X) + spec.out_sum(Z) - popcount(X) * popcount(Z) + popcount(X & Z)


def simple_realizable(spec: DegreeSpec, method: str = "prefix") -> FeasibilityVerdict:
    """Existence of a simple digraph fitting ``spec``.

    ``method="prefix"`` scans the ``(n+1)^2`` prefix pairs; ``"exhaustive"``
    scans every ``(X, Z)``.
    """
    n, gamma = spec.n, spec.gamma
    if method == "prefix":
        by_in, by_out = prefix_orders(spec)
        xs, zs = prefix_masks(by_in), prefix_masks(by_out)
        pairs = ((X, Z) for X in xs for Z in zs)
    elif method == "exhaustive":
        V = full_mask(n)
        pairs = ((X, Z) for X in range(V + 1) for Z in range(V + 1))
    else:
        raise InputError(f"unknown method {method!r}")
    for X, Z in pairs:
        lhs = _simple_lhs(spec, X, Z)
        if lhs > gamma:
            return FeasibilityVerdict.violated("simple", lhs, gamma, X=members(X), Z=members(Z))
    return FeasibilityVerdict.ok()


def simple_realize(spec: DegreeSpec) -> RealizationResult:
    """A simple digraph fitting ``spec`` (flow on the complete digraph), or a
    prefix-form certificate."""
    result = ore_realize(complete_digraph(spec.n), spec)
    verdict = simple_realizable(spec)
    if result.feasible != verdict.feasible:
        raise InvariantViolation("flow realization and prefix test disagree")
    if not result.feasible:
        return RealizationResult.from_verdict(verdict)
    return result
