from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ddf.bisets import (
    BiSet,
    PFunctionContext,
    arc_covers,
    family_p1,
    in_degree,
    independent,
    is_crossing,
    is_independent_family,
    is_oneway,
    join,
    max_p1_independent,
    max_weight_independent,
    meet,
    oneway_candidates,
    p_value,
)
from ddf.digraph import DegreeSpec, Digraph, full_mask, star_graph, subsets
from ddf.errors import CapExceeded, InputError
from ddf.grids import random_augmenting_spec, random_simple_digraph


def all_bisets(n: int):
    V = full_mask(n)
    for outer in range(V + 1):
        for inner in subsets(outer):
            yield BiSet(outer, inner)


def nontrivial(n: int):
    return [b for b in all_bisets(n) if not b.is_trivial(n)]


def test_biset_basics():
    b = BiSet.of([0, 1, 2], [0])
    assert b.wall_size == 2
    assert b.wall == 0b110
    assert BiSet.from_json(b.to_json()) == b
    with pytest.raises(InputError):
        BiSet(0b01, 0b10)
    assert BiSet(0b111, 0b1).is_trivial(3)
    assert BiSet(0b1, 0).is_trivial(3)


def test_arc_covers_and_independence():
    b = BiSet.of([0, 1], [0])
    assert arc_covers((2, 0), b)
    assert not arc_covers((1, 0), b)
    c = BiSet.of([1, 2], [2])
    assert independent(b, c, 3)
    assert is_independent_family([b, c], 3)


def test_independent_means_no_common_covering_arc():
    n = 3
    bs = nontrivial(n)
    arcs = [(u, v) for u in range(n) for v in range(n) if u != v]
    for b, c in itertools.product(bs, repeat=2):
        shared = any(arc_covers(a, b) and arc_covers(a, c) for a in arcs)
        assert independent(b, c, n) == (not shared)


def test_in_degree_is_modular_on_meet_and_join():
    # rho(B) + rho(C) >= rho(B meet C) + rho(B join C) for any digraph
    rng = random.Random(3)
    n = 4
    bs = list(all_bisets(n))
    for _ in range(20):
        g = random_simple_digraph(rng, n, 0.5)
        for b, c in rng.sample(list(itertools.product(bs, repeat=2)), 300):
            assert in_degree(g, b) + in_degree(g, c) >= in_degree(g, meet(b, c)) + in_degree(g, join(b, c))


def test_p_value_rejects_trivial():
    ctx = PFunctionContext(Digraph(3), DegreeSpec((1, 1, 1), (1, 1, 1)), 1)
    with pytest.raises(InputError):
        p_value(ctx, BiSet(0b111, 0b1))


def test_p_value_components():
    ctx = PFunctionContext(Digraph(3), DegreeSpec((2, 0, 0), (0, 1, 1)), 2)
    # outer misses exactly node 0 and inner is everything 0 cannot reach in D0
    v = p_value(ctx, BiSet(0b110, 0b110))
    assert v.p2 == 2 and v.p1 == 2 and v.p == 2
    v = p_value(ctx, BiSet(0b011, 0b010))
    assert v.p3 == 1 + 1 - 2
    assert v.p == max(v.p1, v.p2, v.p3, 0)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 3))
def test_supermodular_on_crossing_positive_pairs(seed, k):
    rng = random.Random(seed)
    n = 4
    D0 = random_simple_digraph(rng, n, 0.3)
    ctx = PFunctionContext(D0, random_augmenting_spec(rng, D0, 2), k)
    # p lives on the non-trivial bi-sets that are one-way for D0
    bs = [b for b in nontrivial(n) if is_oneway(D0, b)]
    vals = {b: p_value(ctx, b) for b in bs}
    for b, c in itertools.combinations(bs, 2):
        if not is_crossing(b, c, n) or vals[b].p <= 0 or vals[c].p <= 0:
            continue
        m, j = meet(b, c), join(b, c)
        assert vals[b].p + vals[c].p <= vals[m].p + vals[j].p


def brute_best(cands, k, n):
    best = 0
    for r in range(len(cands) + 1):
        for fam in itertools.combinations(cands, r):
            if is_independent_family(list(fam), n):
                best = max(best, family_p1(fam, k))
    return best


@pytest.mark.parametrize("seed", range(12))
def test_max_p1_matches_brute_force(seed):
    rng = random.Random(seed)
    n = 3
    g = random_simple_digraph(rng, n, rng.choice([0.2, 0.5, 0.8]))
    for k in (1, 2):
        value, fam = max_p1_independent(g, k)
        cands = oneway_candidates(g, k)
        assert all(is_oneway(g, b) and not b.is_trivial(n) for b in cands)
        assert is_independent_family(fam, n)
        assert value == family_p1(fam, k) == brute_best(cands, k, n)


def test_max_weight_independent_small():
    # path 0-1-2 of conflicts: best is {0, 2}
    compatible = [0b100, 0b000, 0b001]
    assert max_weight_independent([3, 4, 3], compatible) == (6, 0b101)
    assert max_weight_independent([1, 5, 1], compatible)[0] == 5


def test_family_search_cap():
    with pytest.raises(CapExceeded):
        max_p1_independent(Digraph(4), 1, cap=3)


def test_complete_digraph_has_no_deficient_family():
    g = star_graph(4, full_mask(4), full_mask(4))
    assert max_p1_independent(g, 3)[0] == 0
