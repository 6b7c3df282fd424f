from __future__ import annotations

import dataclasses
import random

import pytest

from ddf.characterize import (
    AugmentInstance,
    available_arcs,
    check_cover_crossing_family,
    check_edge_augment_multigraph,
    check_edge_augment_plus_one,
    check_instance,
    check_k_connected_degree_sequence,
    check_node_augment_multigraph,
    check_node_augment_simple,
    check_strong_augment_simple,
    check_strong_simple,
    is_crossing_family,
    is_feasible_target,
    recheck_certificate,
    tight_sets,
)
from ddf.digraph import DegreeSpec, Digraph, complete_digraph
from ddf.errors import CapExceeded, InputError, InvariantViolation, PreconditionError
from ddf.grids import (
    all_specs,
    random_augmenting_spec,
    random_simple_digraph,
    random_spec,
)
from ddf.oracle import OracleQuery, oracle_exists

WORKED = DegreeSpec((2, 2, 2, 3), (2, 2, 2, 3))


def test_worked_example_is_two_connectable():
    assert check_k_connected_degree_sequence(WORKED, 2).feasible
    assert check_instance(AugmentInstance(Digraph(4), WORKED, 2)).feasible


def test_kseq_single_node_certificate():
    spec = DegreeSpec((1,), (1,))
    v = check_k_connected_degree_sequence(spec, 1)
    assert not v.feasible and v.certificate == {"X": [0], "Z": [0]}
    assert recheck_certificate(v, spec) == (v.lhs, v.rhs)


def test_kseq_k_out_of_range():
    with pytest.raises(PreconditionError):
        check_k_connected_degree_sequence(DegreeSpec((1, 1), (1, 1)), 2)


def test_kseq_cycle_degrees():
    ones = DegreeSpec((1,) * 4, (1,) * 4)
    assert check_k_connected_degree_sequence(ones, 1).feasible
    v = check_k_connected_degree_sequence(ones, 2)
    assert not v.feasible and v.condition == "kcon"
    recheck_certificate(v, ones, k=2)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_kseq_with_k1_equals_strong(n):
    for spec in all_specs(n, 3 if n == 4 else n):
        assert check_k_connected_degree_sequence(spec, 1).feasible == check_strong_simple(spec).feasible


def test_kseq_is_monotone_in_k():
    for spec in all_specs(4, 3):
        feas = [check_k_connected_degree_sequence(spec, k).feasible for k in (1, 2, 3)]
        assert feas == sorted(feas, reverse=True)


def test_strong_methods_agree_on_n4():
    for spec in all_specs(4, 3):
        a = check_strong_simple(spec, "prefix").feasible
        b = check_strong_simple(spec, "exhaustive").feasible
        assert a == b == check_strong_simple(spec).feasible


def test_strong_all_ones_cycle_and_star():
    assert check_strong_simple(DegreeSpec((1, 1, 1, 1), (1, 1, 1, 1))).feasible
    v = check_strong_simple(DegreeSpec((3, 0, 0, 0), (0, 1, 1, 1)))
    assert not v.feasible
    recheck_certificate(v, DegreeSpec((3, 0, 0, 0), (0, 1, 1, 1)))


def test_certificates_recheck_on_grids():
    rng = random.Random(11)
    for spec in all_specs(3, 2):
        for v, kw in [
            (check_strong_simple(spec), {}),
            (check_k_connected_degree_sequence(spec, 1), {"k": 1}),
        ]:
            if not v.feasible:
                recheck_certificate(v, spec, **kw)
    for _ in range(120):
        n = rng.randint(2, 4)
        D0 = random_simple_digraph(rng, n, 0.3)
        spec = random_augmenting_spec(rng, D0, 2)
        k = rng.randint(1, n - 1)
        for simplicity in ("augmented_simple", "augmenting_simple", "any", "loopless"):
            inst = AugmentInstance(D0, spec, k, "node", simplicity)
            v = check_instance(inst)
            if not v.feasible:
                # the dispatcher reads a missing F0 as "no arcs banned"
                f0 = () if simplicity == "augmenting_simple" else None
                recheck_certificate(v, spec, D0, k, f0)
        for simplicity in ("any", "loopless"):
            v = check_instance(AugmentInstance(D0, spec, k, "edge", simplicity))
            if not v.feasible:
                recheck_certificate(v, spec, D0, k)


def test_recheck_rejects_tampered_certificate():
    spec = DegreeSpec((1, 1, 1, 1), (1, 1, 1, 1))
    v = check_k_connected_degree_sequence(spec, 2)
    forged = dataclasses.replace(v, certificate={"X": [], "Z": [], "k": 2})
    with pytest.raises(InvariantViolation):
        recheck_certificate(forged, spec, k=2)
    shifted = dataclasses.replace(v, lhs=v.lhs + 1)
    with pytest.raises(InvariantViolation):
        recheck_certificate(shifted, spec, k=2)


def test_cover_family():
    assert is_crossing_family([0b0011, 0b0110, 0b0010, 0b0111], 4)
    assert not is_crossing_family([0b0011, 0b0110], 4)
    spec = DegreeSpec((1, 0, 0), (0, 1, 0))
    assert check_cover_crossing_family(spec, [0b010]).feasible
    v = check_cover_crossing_family(spec, [0b100])
    assert not v.feasible and v.certificate["K"] == [2]
    recheck_certificate(v, spec, family=[0b100])
    with pytest.raises(InputError):
        check_cover_crossing_family(spec, [0b111])


def test_edge_plus_one():
    D0 = Digraph(3, [(0, 1), (1, 2), (2, 0)])
    assert tight_sets(D0, 1) == list(range(1, 7))
    reverse = DegreeSpec((1, 1, 1), (1, 1, 1))
    # the reversed cycle raises every cut by one
    assert check_edge_augment_plus_one(D0, reverse, 2).feasible
    assert not check_edge_augment_plus_one(D0, DegreeSpec((1, 0, 0), (0, 1, 0)), 2).feasible
    with pytest.raises(PreconditionError):
        check_edge_augment_plus_one(Digraph(3), reverse, 2)


def test_edge_multigraph_conditions():
    D0 = Digraph(3)
    v = check_edge_augment_multigraph(D0, DegreeSpec((1, 1, 0), (1, 1, 0)), 1)
    assert not v.feasible and v.condition in ("edge-in", "edge-out")
    loopy = DegreeSpec((2, 0, 0), (2, 0, 0))
    assert check_edge_augment_multigraph(D0, loopy, 0).feasible
    assert check_edge_augment_multigraph(D0, loopy, 0, loopless=True).condition == "loopless"


def test_available_arcs_counts_non_loop_free_pairs():
    D0 = Digraph(3, [(0, 1)])
    assert available_arcs(3, 0b001, 0b110, D0) == 1
    assert available_arcs(3, 0b111, 0b111, Digraph(3)) == 6


def test_node_multigraph_point_condition():
    inst = AugmentInstance(Digraph(3), DegreeSpec((1, 1, 0), (0, 1, 1)), 1, simplicity="any")
    v = check_node_augment_multigraph(inst)
    assert not v.feasible and v.condition in ("point-in", "point-out")


def test_strong_augment_source_component():
    # 0 -> 1 with nothing back: some arc must enter {0}
    D0 = Digraph(2, [(0, 1)])
    assert check_strong_augment_simple(D0, DegreeSpec((0, 1), (1, 0))).feasible
    v = check_strong_augment_simple(D0, DegreeSpec((0, 0), (0, 0)))
    assert not v.feasible and v.condition == "source-in"


def test_node_simple_general_and_f0():
    D0 = Digraph(3, [(0, 1), (1, 2)])
    spec = DegreeSpec((0, 0, 1), (1, 0, 0))
    inst = AugmentInstance(D0, spec, 1, simplicity="augmented_simple")
    assert check_node_augment_simple(inst).feasible
    # with F0 = D0 the reverse of an existing arc is still fine, D0 arcs are banned
    blocked = AugmentInstance(D0, DegreeSpec((1, 0, 0), (0, 1, 0)), 1, simplicity="augmenting_simple", F0=D0.arcs)
    assert not check_node_augment_simple(blocked).feasible
    free = AugmentInstance(D0, DegreeSpec((1, 0, 0), (0, 1, 0)), 1, simplicity="augmenting_simple", F0=())
    assert not check_node_augment_simple(free).feasible  # nothing enters node 0


def test_instance_validation():
    with pytest.raises(InputError):
        AugmentInstance(Digraph(3), DegreeSpec((0, 0), (0, 0)), 1)
    with pytest.raises(InputError):
        AugmentInstance(Digraph(3), DegreeSpec.zero(3), 3)
    with pytest.raises(InputError):
        AugmentInstance(Digraph(3, [(0, 1)]), DegreeSpec.zero(3), 1, F0=[(0, 1)])
    with pytest.raises(InputError):
        AugmentInstance(Digraph(3, [(0, 1)]), DegreeSpec.zero(3), 1, simplicity="augmenting_simple", F0=[(1, 0)])
    with pytest.raises(InputError):
        check_instance(AugmentInstance(Digraph(3), DegreeSpec.zero(3), 1, mode="edge"))


def test_family_checks_are_capped():
    n = 7
    inst = AugmentInstance(Digraph(n, [(0, 1)]), DegreeSpec.zero(n), 1, simplicity="any")
    with pytest.raises(CapExceeded):
        check_node_augment_multigraph(inst)


def test_feasible_target_audit():
    K = complete_digraph(3)
    inst = AugmentInstance(Digraph(3), K.degree_spec(), 2)
    assert is_feasible_target(inst, K)
    assert not is_feasible_target(inst, Digraph(3, [(0, 1), (0, 1)]))


def test_dispatcher_routes():
    spec = random_spec(random.Random(1), 4, 2)
    D0 = Digraph(4)
    assert check_instance(AugmentInstance(D0, spec, 2)).feasible == check_k_connected_degree_sequence(spec, 2).feasible
    D1 = Digraph(4, [(0, 1)])
    inst = AugmentInstance(D1, spec, 1)
    assert check_instance(inst).feasible == check_strong_augment_simple(D1, spec).feasible


def test_kseq_random_n5_against_oracle():
    rng = random.Random(5)
    for _ in range(500):
        spec = random_augmenting_spec(rng, Digraph(5), 4)
        k = rng.randint(1, 3)
        got = check_k_connected_degree_sequence(spec, k).feasible
        assert got == oracle_exists(OracleQuery(spec, k=k, simplicity="simple_D"))[0], (spec, k)


def test_kseq_with_k1_equals_strong_random_n5():
    rng = random.Random(6)
    for _ in range(2000):
        spec = random_spec(rng, 5, 4)
        assert check_k_connected_degree_sequence(spec, 1).feasible == check_strong_simple(spec).feasible
