"""JSON instance loading.

Digraph instance: ``{"n", "arcs", "m_o", "m_i", "k"}`` plus optional
``"f0"`` (arc subset of ``arcs``), ``"family"`` (list of node lists) and
``"augmenting_arcs"``.  Bigraph instance: ``{"n", "edges", "m_S", "m_T",
"k"}`` plus optional ``"matching"``.  A file holding a command report
(with an ``"instance"`` key) is unwrapped to that instance.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .bigraph import BipartiteInstance
from .digraph import DegreeSpec, Digraph, to_mask
from .errors import InputError

SCHEMA = "ddf-1"


def load_json(path: str | Path) -> Any:
    text = Path(path).read_text() if str(path) != "-" else sys.stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def _unwrap(data: Any) -> dict:
    if not isinstance(data, dict):
        raise InputError("instance must be a JSON object")
    if "instance" in data and isinstance(data["instance"], dict):
        return data["instance"]
    return data


def _int(data: dict, key: str, default=None) -> int | None:
    value = data.get(key, default)
    if value is None:
        return None
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{key!r} must be an integer")
    return value


def _pairs(data: dict, key: str) -> list[tuple[int, int]]:
    raw = data.get(key) or []
    if not isinstance(raw, list):
        raise InputError(f"{key!r} must be a list of pairs")
    out = []
    for i, item in enumerate(raw):
        if not (isinstance(item, list) and len(item) == 2 and all(isinstance(x, int) for x in item)):
            raise InputError(f"{key}[{i}] must be a pair of integers")
        out.append((item[0], item[1]))
    return out


def _ints(data: dict, key: str) -> tuple[int, ...] | None:
    raw = data.get(key)
    if raw is None:
        return None
    if not isinstance(raw, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in raw):
        raise InputError(f"{key!r} must be a list of integers")
    return tuple(raw)


@dataclass
class Instance:
    n: int
    D0: Digraph
    spec: DegreeSpec | None
    k: int | None
    f0: list[tuple[int, int]] | None
    family: list[int] | None
    augmenting: Digraph | None

    def require_spec(self) -> DegreeSpec:
        if self.spec is None:
            raise InputError("this command needs 'm_o' and 'm_i'")
        return self.spec

    def require_k(self, override: int | None = None) -> int:
        k = override if override is not None else self.k
        if k is None:
            raise InputError("this command needs 'k' (in the instance or via --k)")
        return k


def parse_instance(data: Any) -> Instance:
    data = _unwrap(data)
    n = _int(data, "n")
    m_o, m_i = _ints(data, "m_o"), _ints(data, "m_i")
    if n is None:
        if m_o is None:
            raise InputError("instance needs 'n' or a degree spec")
        n = len(m_o)
    if (m_o is None) != (m_i is None):
        raise InputError("give both 'm_o' and 'm_i' or neither")
    spec = None
    if m_o is not None:
        if len(m_o) != n or len(m_i) != n:
            raise InputError(f"degree spec must have n={n} entries")
        spec = DegreeSpec(m_o, m_i)
    D0 = Digraph(n, _pairs(data, "arcs"))
    f0 = _pairs(data, "f0") if "f0" in data else None
    family = None
    if "family" in data:
        family = []
        for i, members in enumerate(data["family"] or []):
            if not isinstance(members, list) or not all(isinstance(x, int) and 0 <= x < n for x in members):
                raise InputError(f"family[{i}] must be a list of node ids")
            family.append(to_mask(members))
    augmenting = Digraph(n, _pairs(data, "augmenting_arcs")) if "augmenting_arcs" in data else None
    return Instance(n, D0, spec, _int(data, "k"), f0, family, augmenting)


def parse_bigraph(data: Any) -> tuple[BipartiteInstance, int | None]:
    data = _unwrap(data)
    n = _int(data, "n")
    m_S, m_T = _ints(data, "m_S"), _ints(data, "m_T")
    if n is None:
        if m_S is None:
            raise InputError("bigraph needs 'n' or side specs")
        n = len(m_S)
    matching = _pairs(data, "matching") if "matching" in data else None
    inst = BipartiteInstance(n, tuple(_pairs(data, "edges")), m_S, m_T, matching=matching)
    return inst, _int(data, "k")


def dumps(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)
