from __future__ import annotations

import pytest

from ddf.errors import InputError
from ddf.grids import PRESETS, all_specs, oracle_grid

QUICK = sorted(p for p in PRESETS if p not in ("kelem-n4", "kseq-n4", "kseq-n5"))


def test_all_specs_balanced():
    specs = list(all_specs(2, 2))
    assert all(sum(s.m_o) == sum(s.m_i) for s in specs)
    # pairs of 2-tuples over 0..2 with equal sums: 1+4+9+4+1
    assert len(specs) == 19


@pytest.mark.parametrize("preset", QUICK)
def test_preset_has_no_disagreements(preset):
    report = oracle_grid(preset, seed=3, count=60)
    assert report.cases > 0
    assert report.ok, report.disagreements[:3]


def test_random_presets_are_reproducible():
    a = oracle_grid("node-simple-n4", seed=9, count=20).to_json()
    b = oracle_grid("node-simple-n4", seed=9, count=20).to_json()
    assert a == b


def test_unknown_preset():
    with pytest.raises(InputError):
        oracle_grid("nope")
