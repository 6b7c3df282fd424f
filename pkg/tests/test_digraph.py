from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ddf.digraph import (
    DegreeSpec,
    Digraph,
    complement,
    complete_digraph,
    full_mask,
    members,
    popcount,
    star_arc_count,
    star_graph,
    subsets,
    to_mask,
)
from ddf.errors import InputError


def arcs_strategy(n_max: int = 5, loops: bool = True):
    def build(n):
        pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
        if not loops:
            pair = pair.filter(lambda a: a[0] != a[1])
        return st.tuples(st.just(n), st.lists(pair, max_size=12))

    return st.integers(1, n_max).flatmap(build)


def test_mask_helpers_roundtrip():
    assert to_mask([0, 2, 3]) == 0b1101
    assert members(0b1101) == [0, 2, 3]
    assert popcount(0b1101) == 3
    assert full_mask(4) == 0b1111
    assert sorted(subsets(0b101)) == [0, 0b001, 0b100, 0b101]


def test_loop_counts_in_node_degree_but_not_set_degree():
    g = Digraph(3, [(0, 0), (1, 0)])
    assert g.in_degree(0) == 2
    assert g.out_degree(0) == 1
    assert g.in_degree_set(to_mask([0])) == 1
    assert not g.is_simple


def test_parallel_arcs_break_simplicity():
    g = Digraph(2, [(0, 1), (0, 1)])
    assert g.multiplicity(0, 1) == 2
    assert not g.is_simple
    assert g.collapse().is_simple


def test_rejects_out_of_range_arc():
    with pytest.raises(InputError):
        Digraph(2, [(0, 2)])


def test_spec_validation():
    with pytest.raises(InputError):
        DegreeSpec((1, 0), (0, 0))
    with pytest.raises(InputError):
        DegreeSpec((1, -1), (0, 0))
    assert DegreeSpec((2, 1), (1, 2)).gamma == 3


def test_spec_fits():
    g = Digraph(3, [(0, 1), (1, 2), (2, 0)])
    assert DegreeSpec((1, 1, 1), (1, 1, 1)).fits(g)
    assert not DegreeSpec((2, 0, 1), (1, 1, 1)).fits(g)


def test_complete_and_complement():
    K = complete_digraph(4)
    assert len(K) == 12
    assert complement(K) == Digraph(4)
    assert complement(Digraph(4)) == K


@pytest.mark.parametrize("n", range(1, 6))
def test_star_graph_arc_count_exhaustive(n):
    V = full_mask(n)
    for Z in range(V + 1):
        for X in range(V + 1):
            g = star_graph(n, Z, X)
            assert g.is_simple
            assert len(g) == star_arc_count(n, Z, X)
            for u in range(n):
                for v in range(n):
                    expected = u != v and ((Z >> u) & 1 or (X >> v) & 1)
                    assert bool(g.multiplicity(u, v)) == bool(expected)


@given(arcs_strategy())
def test_set_degree_identities(data):
    n, arcs = data
    g = Digraph(n, arcs)
    V = full_mask(n)
    for X in range(V + 1):
        # in-degree of X equals out-degree of its complement
        assert g.in_degree_set(X) == g.out_degree_set(V & ~X)
    assert sum(g.in_degrees()) == sum(g.out_degrees()) == len(g)


@given(arcs_strategy())
def test_reverse_swaps_degrees(data):
    n, arcs = data
    g = Digraph(n, arcs)
    r = g.reverse()
    assert r.in_degrees() == g.out_degrees()
    assert r.out_degrees() == g.in_degrees()
    assert r.reverse() == g


@given(arcs_strategy())
def test_matrix_roundtrip(data):
    n, arcs = data
    g = Digraph(n, arcs)
    assert Digraph.from_matrix(g.matrix) == g
    assert g.degree_spec().fits(g)
