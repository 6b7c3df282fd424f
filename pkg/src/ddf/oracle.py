"""Brute-force ground truth.

Enumerates every (multi)digraph fitting a degree specification, row by
row with running column-sum pruning, and tests the target property
directly.  Nothing here consults a characterization checker.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cache, lru_cache
from itertools import combinations

from .connectivity import is_k_connected_masks, is_strong_masks
from .digraph import DegreeSpec, Digraph, full_mask
from .errors import CapExceeded, InputError

SIMPLE_CAP = 6
MULTI_CAP = 4

MODES = ("node", "edge", "strong", "cover", "none")
SIMPLICITIES = ("simple_D", "simple_D0_plus_D", "loopless", "multi")


@dataclass(frozen=True)
class OracleQuery:
    spec: DegreeSpec
    D0: Digraph | None = None
    k: int = 1
    mode: str = "node"
    simplicity: str = "simple_D0_plus_D"
    avoid: tuple[tuple[int, int], ...] = ()
    family: tuple[int, ...] = ()
    multiplicity_cap: int | None = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise InputError(f"unknown oracle mode {self.mode!r}")
        if self.simplicity not in SIMPLICITIES:
            raise InputError(f"unknown simplicity {self.simplicity!r}")
        if self.D0 is not None and self.D0.n != self.spec.n:
            raise InputError("D0 and spec disagree on the node count")


def enumerate_matrices(
    row_sums: Sequence[int],
    col_sums: Sequence[int],
    cell_cap: Sequence[Sequence[int]],
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All non-negative integer matrices with the given margins and
    ``0 <= a[r][c] <= cell_cap[r][c]``."""
    n_rows, n_cols = len(row_sums), len(col_sums)
    if sum(row_sums) != sum(col_sums):
        return
    # capacity still available to column c from rows r.. onward
    tail_cap = [[0] * n_cols for _ in range(n_rows + 1)]
    for r in range(n_rows - 1, -1, -1):
        for c in range(n_cols):
            tail_cap[r][c] = tail_cap[r + 1][c] + cell_cap[r][c]
    cols = list(col_sums)
    rows: list[tuple[int, ...]] = []

    def fill_row(r: int, c: int, left: int, row: list[int]):
        if c == n_cols:
            if left == 0:
                yield tuple(row)
            return
        hi = min(left, cols[c], cell_cap[r][c])
        for x in range(hi, -1, -1):
            # remaining rows must be able to absorb column c's leftover demand
            if cols[c] - x > tail_cap[r + 1][c]:
                break
            row.append(x)
            cols[c] -= x
            yield from fill_row(r, c + 1, left - x, row)
            cols[c] += x
            row.pop()

    def rec(r: int):
        if r == n_rows:
            if not any(cols):
                yield tuple(rows)
            return
        for row in list(fill_row(r, 0, row_sums[r], [])):
            for c, x in enumerate(row):
                cols[c] -= x
            rows.append(row)
            yield from rec(r + 1)
            rows.pop()
            for c, x in enumerate(row):
                cols[c] += x

    yield from rec(0)


def _cell_caps(q: OracleQuery) -> list[list[int]]:
    n = q.spec.n
    D0 = q.D0 or Digraph(n)
    avoid = set(q.avoid)
    if q.simplicity == "simple_D0_plus_D":
        if not D0.is_simple:
            raise InputError("simple augmented digraph requested but D0 is not simple")
        avoid |= set(D0.arcs)
    if q.simplicity in ("simple_D", "simple_D0_plus_D"):
        return [[0 if u == v or (u, v) in avoid else 1 for v in range(n)] for u in range(n)]
    cap = q.multiplicity_cap if q.multiplicity_cap is not None else q.spec.gamma
    return [
        [0 if (u == v and q.simplicity == "loopless") or (u, v) in avoid else cap for v in range(n)]
        for u in range(n)
    ]


@lru_cache(maxsize=1 << 18)
def _k_connected(n: int, outs: tuple[int, ...], k: int) -> bool:
    ins = [0] * n
    for u in range(n):
        o = outs[u]
        for v in range(n):
            if (o >> v) & 1:
                ins[v] |= 1 << u
    return is_k_connected_masks(n, outs, ins, k)


def _min_in_cut(n: int, mat) -> int:
    best = None
    for X in range(1, full_mask(n)):
        total = 0
        for u in range(n):
            if not (X >> u) & 1:
                row = mat[u]
                for v in range(n):
                    if (X >> v) & 1:
                        total += row[v]
        if best is None or total < best:
            best = total
    return best


def satisfies(q: OracleQuery, matrix) -> bool:
    """Target property of ``D0 + D`` where ``D`` has arc multiplicities ``matrix``."""
    n = q.spec.n
    D0 = q.D0 or Digraph(n)
    if q.mode == "none":
        return True
    if q.mode in ("node", "strong"):
        outs = tuple(
            D0.out_neighbors(u) | sum(1 << v for v in range(n) if v != u and matrix[u][v])
            for u in range(n)
        )
        if q.mode == "strong":
            ins = [sum(1 << u for u in range(n) if (outs[u] >> v) & 1) for v in range(n)]
            return is_strong_masks(outs, ins, full_mask(n))
        return _k_connected(n, outs, q.k)
    if q.mode == "edge":
        if n < 2 or q.k <= 0:
            return True
        mat = [[D0.multiplicity(u, v) + matrix[u][v] for v in range(n)] for u in range(n)]
        return _min_in_cut(n, mat) >= q.k
    # cover: D alone must enter every member of the family
    for K in q.family:
        if not any(
            matrix[u][v]
            for u in range(n)
            if not (K >> u) & 1
            for v in range(n)
            if (K >> v) & 1
        ):
            return False
    return True


def _guard(q: OracleQuery, cap: int | None) -> None:
    n = q.spec.n
    simple = q.simplicity in ("simple_D", "simple_D0_plus_D")
    limit = cap if cap is not None else (SIMPLE_CAP if simple else MULTI_CAP)
    if n > limit:
        raise CapExceeded(f"oracle ({q.simplicity})", n, limit)


def fitting_matrices(q: OracleQuery, cap: int | None = None):
    _guard(q, cap)
    return enumerate_matrices(q.spec.m_o, q.spec.m_i, _cell_caps(q))


def oracle_exists(q: OracleQuery, cap: int | None = None) -> tuple[bool, Digraph | None]:
    """Exact existence of ``D`` fitting the spec with ``D0 + D`` meeting the target."""
    for matrix in fitting_matrices(q, cap):
        if satisfies(q, matrix):
            return True, Digraph.from_matrix(matrix)
    return False, None


def count_fitting(q: OracleQuery, cap: int | None = None) -> int:
    return sum(1 for _ in fitting_matrices(q, cap))


def oracle_subgraph_exists(host: Digraph, spec: DegreeSpec) -> tuple[bool, Digraph | None]:
    """Exhaustive search for a subgraph of ``host`` fitting ``spec``."""
    if host.n != spec.n:
        raise InputError("host and spec disagree on the node count")
    if host.n > SIMPLE_CAP:
        raise CapExceeded("subgraph oracle", host.n, SIMPLE_CAP)
    for matrix in enumerate_matrices(spec.m_o, spec.m_i, host.matrix):
        return True, Digraph.from_matrix(matrix)
    return False, None


# -- bipartite ----------------------------------------------------------------


def _has_perfect_matching(adj: Sequence[int], rows: Iterable[int], cols: int) -> bool:
    rows = list(rows)

    @cache
    def rec(i: int, free: int) -> bool:
        if i == len(rows):
            return True
        options = adj[rows[i]] & free
        while options:
            low = options & -options
            if rec(i + 1, free & ~low):
                return True
            options ^= low
        return False

    return rec(0, cols)


def is_k_elementary_by_removal(n: int, adj: Sequence[int], k: int) -> bool:
    """Definition: deleting any ``j`` nodes of ``S`` and any ``j`` of ``T``
    leaves a perfectly matchable bigraph, for every ``0 <= j <= k``.

    ``adj[s]`` is the bitmask of ``T``-neighbours of ``s``.
    """
    if k > n - 1:
        return False
    for j in range(k + 1):
        for rs in combinations(range(n), j):
            rows = [s for s in range(n) if s not in rs]
            for rt in combinations(range(n), j):
                cols = full_mask(n)
                for t in rt:
                    cols &= ~(1 << t)
                if not _has_perfect_matching(adj, rows, cols):
                    return False
    return True


def oracle_k_elementary_exists(
    m_S: Sequence[int], m_T: Sequence[int], k: int
) -> tuple[bool, list[tuple[int, int]] | None]:
    """Exhaustive search for a simple k-elementary bigraph with the given
    side degrees; returns an edge list ``(s, t)`` as witness."""
    n = len(m_S)
    if len(m_T) != n:
        raise InputError("both sides must have the same size")
    if n > MULTI_CAP + 1:
        raise CapExceeded("bipartite oracle", n, MULTI_CAP + 1)
    ones = [[1] * n for _ in range(n)]
    for matrix in enumerate_matrices(m_S, m_T, ones):
        adj = [sum(1 << t for t in range(n) if matrix[s][t]) for s in range(n)]
        if is_k_elementary_by_removal(n, adj, k):
            return True, [(s, t) for s in range(n) for t in range(n) if matrix[s][t]]
    return False, None
