"""Checker-versus-oracle grids.

Each preset enumerates instances, runs the characterization checker and
the brute-force oracle on every one and collects disagreements.  Random
presets are reproducible from their seed.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field

from .bigraph import check_k_elementary_degrees
from .characterize import (
    AugmentInstance,
    check_cover_crossing_family,
    check_edge_augment_multigraph,
    check_edge_augment_plus_one,
    check_k_connected_degree_sequence,
    check_node_augment_multigraph,
    check_node_augment_simple,
    check_strong_augment_simple,
    check_strong_simple,
    tight_sets,
)
from .connectivity import edge_connectivity
from .digraph import DegreeSpec, Digraph, members
from .errors import InputError
from .oracle import (
    OracleQuery,
    oracle_exists,
    oracle_k_elementary_exists,
    oracle_subgraph_exists,
)
from .realize import ore_realize, simple_realizable


@dataclass
class Case:
    label: dict
    checker: Callable[[], bool]
    oracle: Callable[[], bool]


@dataclass
class GridReport:
    preset: str
    cases: int = 0
    feasible: int = 0
    disagreements: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def to_json(self) -> dict:
        return {
            "preset": self.preset,
            "cases": self.cases,
            "feasible": self.feasible,
            "disagreements": self.disagreements,
        }


# -- instance generators ------------------------------------------------------


def all_specs(n: int, hi: int) -> Iterator[DegreeSpec]:
    """Every spec on ``n`` nodes with entries in ``[0, hi]`` and equal totals."""
    for m_o in itertools.product(range(hi + 1), repeat=n):
        for m_i in itertools.product(range(hi + 1), repeat=n):
            if sum(m_o) == sum(m_i):
                yield DegreeSpec(m_o, m_i)


def random_simple_digraph(rng: random.Random, n: int, p: float) -> Digraph:
    return Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p])


def random_spec(rng: random.Random, n: int, hi: int) -> DegreeSpec:
    """Uniform out-degrees in ``[0, hi]``, in-degrees a random split of the
    same total, capped at ``hi`` where possible."""
    m_o = [rng.randint(0, hi) for _ in range(n)]
    m_i = [0] * n
    for _ in range(sum(m_o)):
        room = [v for v in range(n) if m_i[v] < hi] or list(range(n))
        m_i[rng.choice(room)] += 1
    return DegreeSpec(tuple(m_o), tuple(m_i))


def random_augmenting_spec(rng: random.Random, D0: Digraph, hi: int) -> DegreeSpec:
    """Half the time the degrees of a random subgraph of the complement of
    ``D0`` (realizable by construction), otherwise a uniform spec."""
    n = D0.n
    if rng.random() < 0.5:
        p = rng.choice([0.3, 0.5, 0.7])
        arcs = [
            (u, v)
            for u in range(n)
            for v in range(n)
            if u != v and not D0.multiplicity(u, v) and rng.random() < p
        ]
        return Digraph(n, arcs).degree_spec()
    return random_spec(rng, n, hi)


# -- presets ------------------------------------------------------------------


def _spec_label(spec: DegreeSpec, **extra) -> dict:
    return {"m_o": list(spec.m_o), "m_i": list(spec.m_i), **extra}


def _d0_label(D0: Digraph, spec: DegreeSpec, **extra) -> dict:
    return {"arcs": D0.to_json(), **_spec_label(spec, **extra)}


def _simple_n4(seed, count):
    for spec in all_specs(4, 3):
        yield Case(
            _spec_label(spec),
            lambda s=spec: simple_realizable(s).feasible,
            lambda s=spec: oracle_exists(OracleQuery(s, mode="none", simplicity="simple_D"))[0],
        )


def _kseq(n, hi, ks):
    def gen(seed, count):
        for spec in all_specs(n, hi):
            for k in ks:
                yield Case(
                    _spec_label(spec, k=k),
                    lambda s=spec, k=k: check_k_connected_degree_sequence(s, k).feasible,
                    lambda s=spec, k=k: oracle_exists(OracleQuery(s, k=k, simplicity="simple_D"))[0],
                )

    return gen


def _strong_grid(seed, count):
    for spec in all_specs(4, 3):
        yield _strong_case(spec)


def _strong_case(spec):
    return Case(
        _spec_label(spec),
        lambda: check_strong_simple(spec).feasible,
        lambda: oracle_exists(OracleQuery(spec, mode="strong", simplicity="simple_D"))[0],
    )


def _strong_random(seed, count):
    rng = random.Random(seed)
    for _ in range(count or 1000):
        yield _strong_case(random_spec(rng, 5, 4))


def _strong_augment(seed, count):
    rng = random.Random(seed)
    for _ in range(count or 500):
        D0 = random_simple_digraph(rng, 4, rng.choice([0.0, 0.2, 0.35, 0.5]))
        spec = random_augmenting_spec(rng, D0, 3)
        yield Case(
            _d0_label(D0, spec),
            lambda D0=D0, s=spec: check_strong_augment_simple(D0, s).feasible,
            lambda D0=D0, s=spec: oracle_exists(OracleQuery(s, D0, 1, "strong", "simple_D0_plus_D"))[0],
        )


def _node_simple(seed, count, with_f0=False):
    rng = random.Random(seed)
    for i in range(count or 300):
        # every fourth instance starts from the empty digraph
        p = 0.0 if i % 4 == 0 else rng.choice([0.15, 0.3, 0.5])
        D0 = random_simple_digraph(rng, 4, p)
        spec = random_augmenting_spec(rng, D0, 3)
        k = rng.choice([1, 2])
        if with_f0:
            F0 = tuple(a for a in D0.arcs if rng.random() < 0.5)
            inst = AugmentInstance(D0, spec, k, simplicity="augmenting_simple", F0=F0)
            query = OracleQuery(spec, D0, k, "node", "simple_D", avoid=F0)
            label = _d0_label(D0, spec, k=k, f0=[list(a) for a in F0])
        else:
            inst = AugmentInstance(D0, spec, k)
            query = OracleQuery(spec, D0, k, "node", "simple_D0_plus_D")
            label = _d0_label(D0, spec, k=k)
        yield Case(
            label,
            lambda inst=inst: check_node_augment_simple(inst).feasible,
            lambda q=query: oracle_exists(q)[0],
        )


def _node_f0(seed, count):
    return _node_simple(seed, count, with_f0=True)


def _multi(kind):
    def gen(seed, count):
        rng = random.Random(seed)
        made = 0
        while made < (count or 300):
            D0 = random_simple_digraph(rng, 4, rng.choice([0.0, 0.2, 0.4]))
            spec = random_spec(rng, 4, 2)
            if spec.gamma > 6:
                continue
            k = rng.choice([1, 2])
            loopless = kind.endswith("loopless")
            simplicity = "loopless" if loopless else "multi"
            if kind.startswith("node"):
                inst = AugmentInstance(D0, spec, k, simplicity="loopless" if loopless else "any")
                checker = lambda inst=inst: check_node_augment_multigraph(inst).feasible
                query = OracleQuery(spec, D0, k, "node", simplicity)
            else:
                checker = lambda D0=D0, s=spec, k=k, ll=loopless: check_edge_augment_multigraph(D0, s, k, ll).feasible
                query = OracleQuery(spec, D0, k, "edge", simplicity)
            made += 1
            yield Case(_d0_label(D0, spec, k=k, loopless=loopless), checker, lambda q=query: oracle_exists(q)[0])

    return gen


def _edge_plus_one(seed, count):
    rng = random.Random(seed)
    made = 0
    while made < (count or 300):
        D0 = random_simple_digraph(rng, 4, rng.choice([0.0, 0.25, 0.5]))
        spec = random_augmenting_spec(rng, Digraph(4), 3)
        k = rng.choice([1, 2])
        if edge_connectivity(D0) < k - 1 or not simple_realizable(spec):
            continue
        made += 1
        yield Case(
            _d0_label(D0, spec, k=k),
            lambda D0=D0, s=spec, k=k: check_edge_augment_plus_one(D0, s, k).feasible,
            lambda D0=D0, s=spec, k=k: oracle_exists(OracleQuery(s, D0, k, "edge", "simple_D"))[0],
        )


def _cover(seed, count):
    rng = random.Random(seed)
    made = 0
    while made < (count or 300):
        n = rng.choice([3, 4])
        D0 = random_simple_digraph(rng, n, rng.choice([0.2, 0.4, 0.6]))
        value = rng.choice([0, 1])
        family = tuple(tight_sets(D0, value))
        if n >= 2 and edge_connectivity(D0) < value:
            continue
        spec = random_augmenting_spec(rng, Digraph(n), n - 1)
        if not simple_realizable(spec):
            continue
        made += 1
        yield Case(
            {**_d0_label(D0, spec), "family": [members(K) for K in family]},
            lambda s=spec, f=family: check_cover_crossing_family(s, f).feasible,
            lambda s=spec, f=family: oracle_exists(OracleQuery(s, mode="cover", simplicity="simple_D", family=f))[0],
        )


def _ore(seed, count):
    rng = random.Random(seed)
    for _ in range(count or 1000):
        n = rng.randint(1, 5)
        host = random_simple_digraph(rng, n, rng.choice([0.3, 0.5, 0.8]))
        spec = random_spec(rng, n, rng.randint(1, 3))
        yield Case(
            {"host": host.to_json(), **_spec_label(spec)},
            lambda h=host, s=spec: ore_realize(h, s).feasible,
            lambda h=host, s=spec: oracle_subgraph_exists(h, s)[0],
        )


def _kelem(seed, count):
    for k in (1, 2):
        for m_S in itertools.product(range(5), repeat=4):
            for m_T in itertools.product(range(5), repeat=4):
                if sum(m_S) != sum(m_T):
                    continue
                yield Case(
                    {"m_S": list(m_S), "m_T": list(m_T), "k": k},
                    lambda a=m_S, b=m_T, k=k: check_k_elementary_degrees(a, b, k).feasible,
                    lambda a=m_S, b=m_T, k=k: oracle_k_elementary_exists(a, b, k)[0],
                )


PRESETS: dict[str, tuple[str, Callable]] = {
    "simple-n4": ("simple realizability, all n=4 specs with entries <= 3", _simple_n4),
    "kseq-n4": ("simple k-connected realization, all n=4 specs with entries <= 3, k=1..3", _kseq(4, 3, (1, 2, 3))),
    "kseq-n5": ("simple k-connected realization, all n=5 specs with entries <= 4, k=1..3 (minutes)", _kseq(5, 4, (1, 2, 3))),
    "strong-n4": ("simple strong realization, all n=4 specs with entries <= 3", _strong_grid),
    "strong-n5-random": ("simple strong realization, random n=5 specs", _strong_random),
    "strong-augment-n4": ("simple strong augmentation, random n=4 (D0, spec)", _strong_augment),
    "node-simple-n4": ("simple k-connected augmentation, random n=4, k=1..2", _node_simple),
    "node-f0-n4": ("k-connected augmentation avoiding F0, random n=4", _node_f0),
    "node-multi-n4": ("k-connected augmentation by any digraph, random n=4", _multi("node")),
    "node-loopless-n4": ("k-connected augmentation by a loopless digraph, random n=4", _multi("node-loopless")),
    "edge-multi-n4": ("k-edge-connected augmentation by any digraph, random n=4", _multi("edge")),
    "edge-loopless-n4": ("k-edge-connected augmentation by a loopless digraph, random n=4", _multi("edge-loopless")),
    "edge-plus-one-n4": ("raise edge-connectivity by one with a simple digraph, random n=4", _edge_plus_one),
    "cover-n4": ("simple digraph covering a crossing family, random n<=4", _cover),
    "ore-n5": ("subgraph realization, random hosts n<=5", _ore),
    "kelem-n4": ("k-elementary bigraph degrees, all n=4 side specs with entries <= 4, k=1..2", _kelem),
}


def oracle_grid(preset: str, seed: int = 0, count: int | None = None) -> GridReport:
    """Run ``preset``; random presets draw ``count`` instances from ``seed``."""
    if preset not in PRESETS:
        raise InputError(f"unknown preset {preset!r}; choose from {', '.join(sorted(PRESETS))}")
    report = GridReport(preset)
    for case in PRESETS[preset][1](seed, count):
        got, truth = case.checker(), case.oracle()
        report.cases += 1
        report.feasible += bool(truth)
        if got != truth:
            report.disagreements.append({**case.label, "checker": got, "oracle": truth})
    return report
