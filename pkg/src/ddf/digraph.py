"""Directed multigraphs, degree specifications and node-set bitmasks.

Node sets are passed around as integer bitmasks: bit ``v`` set means node
``v`` belongs to the set.  Every characterization checker enumerates
subsets, so masks keep the hot loops cheap.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property

from .errors import InputError

MAX_NODES = 62

Arc = tuple[int, int]


def full_mask(n: int) -> int:
    return (1 << n) - 1


def to_mask(nodes: Iterable[int]) -> int:
    mask = 0
    for v in nodes:
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    """Nodes of a bitmask in increasing order."""
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def subsets(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` (including 0 and ``mask``), increasing."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def subset_sums(values: Sequence[int]) -> list[int]:
    """Table ``t[mask] = sum(values[v] for v in mask)``."""
    n = len(values)
    table = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        table[mask] = table[mask ^ low] + values[low.bit_length() - 1]
    return table


class Digraph:
    """Immutable directed multigraph on nodes ``0..n-1``.

    Loops and parallel arcs are representable; simplicity is checked, never
    enforced.  A loop at ``v`` counts toward :meth:`in_degree` ``(v)`` but
    not toward ``in_degree_set(1 << v)``.
    """

    __slots__ = ("__weakref__", "_in_mask", "_mult", "_out_mask", "_simple", "arcs", "n")

    def __init__(self, n: int, arcs: Iterable[Sequence[int]] = ()):
        if not isinstance(n, int) or n < 0:
            raise InputError(f"node count must be a non-negative integer, got {n!r}")
        if n > MAX_NODES:
            raise InputError(f"n={n} exceeds the bitmask limit of {MAX_NODES} nodes")
        mult = [[0] * n for _ in range(n)]
        clean: list[Arc] = []
        for arc in arcs:
            if len(arc) != 2:
                raise InputError(f"arc must be a (tail, head) pair, got {arc!r}")
            u, v = int(arc[0]), int(arc[1])
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"arc ({u}, {v}) has an endpoint outside 0..{n - 1}")
            mult[u][v] += 1
            clean.append((u, v))
        self.n = n
        self.arcs: tuple[Arc, ...] = tuple(sorted(clean))
        self._mult = tuple(tuple(row) for row in mult)
        out_mask = [0] * n
        in_mask = [0] * n
        for u, v in clean:
            if u != v:
                out_mask[u] |= 1 << v
                in_mask[v] |= 1 << u
        self._out_mask = tuple(out_mask)
        self._in_mask = tuple(in_mask)
        self._simple = all(
            (m == 0 if u == v else m <= 1) for u, row in enumerate(mult) for v, m in enumerate(row)
        )

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> Digraph:
        n = len(matrix)
        arcs = [(u, v) for u in range(n) for v in range(n) for _ in range(matrix[u][v])]
        return cls(n, arcs)

    # -- basic accounting ---------------------------------------------------

    def __len__(self) -> int:
        return len(self.arcs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Digraph) and self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={list(self.arcs)})"

    @property
    def V(self) -> int:
        return full_mask(self.n)

    def multiplicity(self, u: int, v: int) -> int:
        return self._mult[u][v]

    @property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        return self._mult

    def out_neighbors(self, u: int) -> int:
        """Mask of heads of non-loop arcs leaving ``u``."""
        return self._out_mask[u]

    def in_neighbors(self, v: int) -> int:
        """Mask of tails of non-loop arcs entering ``v``."""
        return self._in_mask[v]

    def loops_at(self, v: int) -> int:
        return self._mult[v][v]

    @property
    def loop_count(self) -> int:
        return sum(self._mult[v][v] for v in range(self.n))

    @property
    def is_simple(self) -> bool:
        return self._simple

    def in_degree(self, v: int) -> int:
        """Number of arcs with head ``v``, loops included."""
        return sum(self._mult[u][v] for u in range(self.n))

    def out_degree(self, u: int) -> int:
        """Number of arcs with tail ``u``, loops included."""
        return sum(self._mult[u])

    def in_degrees(self) -> tuple[int, ...]:
        return tuple(self.in_degree(v) for v in range(self.n))

    def out_degrees(self) -> tuple[int, ...]:
        return tuple(self.out_degree(u) for u in range(self.n))

    def in_degree_set(self, X: int) -> int:
        """Arcs with tail outside ``X`` and head inside ``X``."""
        return self.d_between(self.V & ~X, X)

    def out_degree_set(self, X: int) -> int:
        """Arcs with tail inside ``X`` and head outside ``X``."""
        return self.d_between(X, self.V & ~X)

    def d_between(self, Z: int, X: int) -> int:
        """Arcs with tail in ``Z`` and head in ``X`` (loops in ``Z & X`` count)."""
        heads = members(X)
        total = 0
        for u in iter_bits(Z):
            row = self._mult[u]
            total += sum(row[v] for v in heads)
        return total

    def covers(self, Z: int, X: int) -> bool:
        return self.d_between(Z, X) > 0

    def degree_spec(self) -> DegreeSpec:
        return DegreeSpec(self.out_degrees(), self.in_degrees())

    # -- derived digraphs ---------------------------------------------------

    def __add__(self, other: Digraph) -> Digraph:
        if not isinstance(other, Digraph):
            return NotImplemented
        if other.n != self.n:
            raise InputError("cannot add digraphs on different node sets")
        return Digraph(self.n, self.arcs + other.arcs)

    def collapse(self) -> Digraph:
        """Drop loops and merge parallel arcs."""
        return Digraph(self.n, sorted({(u, v) for u, v in self.arcs if u != v}))

    def reverse(self) -> Digraph:
        return Digraph(self.n, [(v, u) for u, v in self.arcs])

    def without_arc(self, arc: Arc) -> Digraph:
        arcs = list(self.arcs)
        arcs.remove(tuple(arc))
        return Digraph(self.n, arcs)

    def arc_mask_key(self) -> int:
        """Bit ``u*n+v`` per non-loop arc; a compact key for simple digraphs."""
        key = 0
        for u, v in self.arcs:
            if u != v:
                key |= 1 << (u * self.n + v)
        return key

    def to_json(self) -> list[list[int]]:
        return [list(a) for a in self.arcs]


@dataclass(frozen=True)
class DegreeSpec:
    """Paired out/in degree prescriptions ``(m_o, m_i)`` with equal totals."""

    m_o: tuple[int, ...]
    m_i: tuple[int, ...]

    def __post_init__(self):
        m_o = tuple(int(x) for x in self.m_o)
        m_i = tuple(int(x) for x in self.m_i)
        object.__setattr__(self, "m_o", m_o)
        object.__setattr__(self, "m_i", m_i)
        if len(m_o) != len(m_i):
            raise InputError(f"m_o has {len(m_o)} entries but m_i has {len(m_i)}")
        if len(m_o) > MAX_NODES:
            raise InputError(f"n={len(m_o)} exceeds the bitmask limit of {MAX_NODES} nodes")
        if any(x < 0 for x in m_o + m_i):
            raise InputError("degree prescriptions must be non-negative")
        if sum(m_o) != sum(m_i):
            raise InputError(f"spec totals mismatch: sum(m_o)={sum(m_o)} != sum(m_i)={sum(m_i)}")

    @classmethod
    def zero(cls, n: int) -> DegreeSpec:
        return cls((0,) * n, (0,) * n)

    @property
    def n(self) -> int:
        return len(self.m_o)

    @property
    def gamma(self) -> int:
        return sum(self.m_o)

    @cached_property
    def _out_table(self) -> list[int]:
        return subset_sums(self.m_o)

    @cached_property
    def _in_table(self) -> list[int]:
        return subset_sums(self.m_i)

    def out_sum(self, mask: int) -> int:
        if self.n <= 16:
            return self._out_table[mask]
        return sum(self.m_o[v] for v in iter_bits(mask))

    def in_sum(self, mask: int) -> int:
        if self.n <= 16:
            return self._in_table[mask]
        return sum(self.m_i[v] for v in iter_bits(mask))

    def reversed(self) -> DegreeSpec:
        """Spec of the reoriented problem (every arc reversed)."""
        return DegreeSpec(self.m_i, self.m_o)

    def fits(self, g: Digraph) -> bool:
        return g.n == self.n and g.out_degrees() == self.m_o and g.in_degrees() == self.m_i


def complete_digraph(n: int) -> Digraph:
    return Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v])


def star_graph(n: int, Z: int, X: int) -> Digraph:
    """``D*[Z, X]``: arc ``uv`` (``u != v``) iff ``u in Z`` or ``v in X``."""
    return Digraph(
        n,
        [
            (u, v)
            for u in range(n)
            for v in range(n)
            if u != v and ((Z >> u) & 1 or (X >> v) & 1)
        ],
    )


def star_arc_count(n: int, Z: int, X: int) -> int:
    z = popcount(Z)
    return z * (n - 1) + (n - z) * popcount(X) - popcount(X & ~Z)


def complement(g: Digraph) -> Digraph:
    """Complete digraph minus the arcs of ``g``; ``g`` must be simple."""
    if not g.is_simple:
        raise InputError("complement is defined for simple digraphs only")
    present = set(g.arcs)
    return Digraph(
        g.n,
        [(u, v) for u in range(g.n) for v in range(g.n) if u != v and (u, v) not in present],
    )
