from __future__ import annotations

import random

import pytest

from ddf.characterize import AugmentInstance, check_instance, is_feasible_target
from ddf.connectivity import is_k_connected, node_connectivity
from ddf.construct import construct_witness, star_augment, star_augmented
from ddf.digraph import (
    DegreeSpec,
    Digraph,
    complete_digraph,
    full_mask,
    popcount,
    to_mask,
)
from ddf.errors import CapExceeded, InputError
from ddf.grids import random_augmenting_spec, random_simple_digraph, random_spec


def test_zero_spec_on_already_connected_start():
    inst = AugmentInstance(complete_digraph(4), DegreeSpec.zero(4), 3)
    result = construct_witness(inst)
    assert result.feasible and len(result.digraph) == 0


def test_worked_example_witness():
    spec = DegreeSpec((2, 2, 2, 3), (2, 2, 2, 3))
    result = construct_witness(AugmentInstance(Digraph(4), spec, 2))
    assert result.feasible
    D = result.digraph
    assert D.is_simple and spec.fits(D) and node_connectivity(D) >= 2


def test_infeasible_defers_to_certificate():
    spec = DegreeSpec((1, 1, 1, 1), (1, 1, 1, 1))
    result = construct_witness(AugmentInstance(Digraph(4), spec, 2))
    assert not result.feasible and result.condition == "kcon" and result.lhs > result.rhs


def test_budget_guard():
    with pytest.raises(CapExceeded):
        construct_witness(AugmentInstance(Digraph(8), DegreeSpec.zero(8), 1))


def _random_instance(rng: random.Random) -> AugmentInstance:
    n = rng.randint(2, 5)
    mode = rng.choice(["node", "node", "edge"])
    if mode == "edge":
        simplicity = rng.choice(["any", "loopless"])
        D0 = random_simple_digraph(rng, n, 0.3)
        return AugmentInstance(D0, random_spec(rng, n, 2), rng.randint(1, 2), mode, simplicity)
    simplicity = rng.choice(["augmented_simple", "augmenting_simple", "any"])
    D0 = Digraph(n) if rng.random() < 0.4 else random_simple_digraph(rng, n, 0.3)
    k = rng.randint(1, min(2, n - 1))
    return AugmentInstance(D0, random_augmenting_spec(rng, D0, 2), k, mode, simplicity)


def test_random_feasible_witnesses_pass_audit():
    rng = random.Random(2024)
    found = 0
    while found < 200:
        inst = _random_instance(rng)
        if inst.spec.n == 5 and inst.simplicity == "any" and inst.mode == "node":
            continue  # family check is slow there and adds nothing new
        if not check_instance(inst).feasible:
            continue
        result = construct_witness(inst)
        assert result.feasible and is_feasible_target(inst, result.digraph)
        found += 1


def test_star_augment_example():
    n, k = 6, 2
    X, Z = to_mask([0, 1]), to_mask([2, 3])
    arcs = star_augment(n, Z, X, k)
    assert len(arcs) == 2
    assert len({u for u, _ in arcs} | {v for _, v in arcs}) == 4
    assert is_k_connected(star_augmented(n, Z, X, k), k)


def test_star_augment_full_nodes_need_nothing():
    both = to_mask([0, 1])
    assert star_augment(5, both, both, 2) == []


def test_star_augment_preconditions():
    with pytest.raises(InputError):
        star_augment(4, 0b10000, 0b1, 1)
    with pytest.raises(InputError):
        star_augment(4, 0b0001, 0b0010, 2)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_star_augment_exhaustive(n):
    V = full_mask(n)
    for Z in range(V + 1):
        for X in range(V + 1):
            for k in range(1, n):
                if popcount(X & Z) < k and (popcount(X) < k or popcount(Z) < k):
                    continue
                g = star_augmented(n, Z, X, k)
                assert g.is_simple
                assert is_k_connected(g, k), (n, Z, X, k)
