from __future__ import annotations

import json

import pytest

from ddf.digraph import to_mask
from ddf.errors import InputError
from ddf.jsonio import dumps, load_json, parse_bigraph, parse_instance


def test_parse_full_instance():
    inst = parse_instance({
        "n": 3, "arcs": [[0, 1]], "m_o": [1, 0, 0], "m_i": [0, 0, 1], "k": 1,
        "f0": [[0, 1]], "family": [[0, 1]], "augmenting_arcs": [[0, 2]],
    })
    assert list(inst.D0.arcs) == [(0, 1)]
    assert inst.spec.gamma == 1 and inst.k == 1
    assert inst.f0 == [(0, 1)] and inst.family == [to_mask([0, 1])]
    assert list(inst.augmenting.arcs) == [(0, 2)]


def test_parse_unwraps_instance_key_and_infers_n():
    inst = parse_instance({"instance": {"m_o": [1, 1], "m_i": [1, 1]}})
    assert inst.n == 2 and inst.D0.n == 2


@pytest.mark.parametrize("bad", [
    {"m_o": [1]},
    {"n": 2, "m_o": [1, 0], "m_i": [1]},
    {"n": 2, "m_o": [1, "x"], "m_i": [1, 0]},
    {"n": 2, "family": [[5]]},
    {},
])
def test_parse_rejects(bad):
    with pytest.raises(InputError):
        parse_instance(bad)


def test_require_k():
    inst = parse_instance({"m_o": [0], "m_i": [0]})
    with pytest.raises(InputError):
        inst.require_k()
    assert inst.require_k(2) == 2


def test_load_json_position(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{\n  "n": [1,\n}')
    with pytest.raises(InputError, match="line 3"):
        load_json(path)


def test_parse_bigraph():
    inst, k = parse_bigraph({"n": 2, "edges": [[0, 0], [1, 1]], "matching": [[0, 0], [1, 1]], "k": 1})
    assert inst.m_S == (1, 1) and k == 1 and inst.matching == ((0, 0), (1, 1))


def test_dumps_sorted():
    text = dumps({"b": 1, "a": 2})
    assert text.index('"a"') < text.index('"b"')
    assert json.loads(text) == {"a": 2, "b": 1}
