"""Shi tableaux of dominant regions of the m-Catalan arrangement of type A_n.

A dominant region is recorded by one integer ``k_{i,j}`` in ``[0, m]`` per
positive root ``alpha_i + ... + alpha_j`` (``1 <= i <= j <= n``): the number
of translates ``H_{alpha,k}``, ``1 <= k <= m``, separating the region from the
origin.  Rows are stored in root order, ``rows[i-1] = (k_{i,i}, ..., k_{i,n})``.
The staircase picture puts ``k_{i,j}`` in box ``(i, n-j+1)``; that layout only
matters for hooks and rendering.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

import numpy as np

from .exceptions import OutOfRangeEntry, RankTooSmall, ShiViolation
from .partitions import StaircasePartition, _check_rank

Entries = Mapping[tuple[int, int], int]


def roots(n: int) -> list[tuple[int, int]]:
    """Positive roots ``(i, j)`` ordered by height ``j - i``, then by ``i``."""
    return [(i, i + h) for h in range(n) for i in range(1, n - h + 1)]


def _rows_from(n: int, entries) -> tuple[tuple[int, ...], ...]:
    if isinstance(entries, Mapping):
        try:
            return tuple(
                tuple(int(entries[i, j]) for j in range(i, n + 1)) for i in range(1, n + 1)
            )
        except KeyError as exc:
            raise OutOfRangeEntry(f"missing entry for root {exc.args[0]}") from None
    rows = tuple(tuple(int(v) for v in row) for row in entries)
    if len(rows) != n or any(len(row) != n - i for i, row in enumerate(rows)):
        raise OutOfRangeEntry(f"rows do not form a staircase of size {n}")
    return rows


def _check_range(n: int, m: int, rows) -> None:
    for i, row in enumerate(rows, start=1):
        for j, v in enumerate(row, start=i):
            if not 0 <= v <= m:
                raise OutOfRangeEntry(f"k_{{{i},{j}}} = {v} is outside [0, {m}]")


def _violations(n: int, m: int, rows) -> list[tuple[int, int, int]]:
    bad = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            kij = rows[i - 1][j - i]
            for l in range(i, j):
                s = rows[i - 1][l - i] + rows[l][j - l - 1]
                if s < m:
                    ok = kij == s or kij == s + 1
                else:
                    ok = kij == m
                if not ok:
                    bad.append((i, l, j))
    return bad


@dataclass(frozen=True)
class ShiTableau:
    """Coordinates of a dominant region.  Construction validates the Shi conditions."""

    n: int
    m: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        _check_rank(self.n, self.m)
        rows = _rows_from(self.n, self.rows)
        object.__setattr__(self, "rows", rows)
        _check_range(self.n, self.m, rows)
        bad = _violations(self.n, self.m, rows)
        if bad:
            raise ShiViolation(bad)

    def k(self, i: int, j: int) -> int:
        if not 1 <= i <= j <= self.n:
            raise IndexError((i, j))
        return self.rows[i - 1][j - i]

    @property
    def entries(self) -> dict[tuple[int, int], int]:
        return {(i, j): self.k(i, j) for i, j in roots(self.n)}

    def box(self, r: int, c: int) -> int:
        """Entry of staircase box ``(r, c)``, i.e. ``k_{r, n-c+1}``."""
        return self.k(r, self.n - c + 1)

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, obj: dict) -> "ShiTableau":
        return cls(int(obj["n"]), int(obj["m"]), tuple(tuple(r) for r in obj["rows"]))

    @classmethod
    def constant(cls, n: int, m: int, value: int) -> "ShiTableau":
        return cls(n, m, tuple((value,) * (n - i) for i in range(n)))


@dataclass(frozen=True)
class WallProfile:
    simple_walls: frozenset[int]
    bounded: bool


def shi_violations(n: int, m: int, entries) -> list[tuple[int, int, int]]:
    """All triplets ``(i, l, j)`` at which the Shi condition fails."""
    _check_rank(n, m)
    rows = _rows_from(n, entries)
    _check_range(n, m, rows)
    return _violations(n, m, rows)


def check_shi_conditions(n: int, m: int, entries) -> ShiTableau:
    """Validate ``entries`` (a ``{(i, j): k}`` map or staircase rows).

    Raises :class:`ShiViolation` listing every failing triplet.
    """
    return ShiTableau(n, m, _rows_from(n, entries))


def hooks_on(n: int, i: int, j: int) -> Iterator[tuple[tuple[int, int], tuple[int, int]]]:
    """Endpoint boxes ``(arm_end, leg_end)`` of each hook of length ``j-i+2``
    cornered at the box holding ``k_{i,j}``.  Hooks that leave the staircase
    are skipped."""
    r, c = i, n - j + 1
    length = j - i + 2
    for arm in range(length):
        leg = length - 1 - arm
        arm_end = (r, c + arm)
        leg_end = (r + leg, c)
        if c + arm > n - r + 1 or r + leg > n - c + 1:
            continue
        yield arm_end, leg_end


def check_hook_conditions(n: int, m: int, entries) -> bool:
    """Hook form of the Shi conditions, evaluated on staircase boxes."""
    _check_rank(n, m)
    rows = _rows_from(n, entries)
    _check_range(n, m, rows)

    def box(r, c):
        return rows[r - 1][n - c + 1 - r]

    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            corner = box(i, n - j + 1)
            for a, b in hooks_on(n, i, j):
                e = box(*a) + box(*b)
                if e < m:
                    if corner not in (e, e + 1):
                        return False
                elif corner != m:
                    return False
    return True


# Vectorised forms over arrays of fillings, columns indexed like ``roots(n)``.

def all_fillings(n: int, m: int) -> np.ndarray:
    """Every filling in ``[0, m]^{n(n+1)/2}`` as an int8 array, one per row."""
    width = n * (n + 1) // 2
    total = (m + 1) ** width
    idx = np.arange(total, dtype=np.int64)
    out = np.empty((total, width), dtype=np.int8)
    for c in range(width):
        out[:, c] = idx % (m + 1)
        idx //= m + 1
    return out


def shi_mask(n: int, m: int, fillings: np.ndarray) -> np.ndarray:
    col = {r: t for t, r in enumerate(roots(n))}
    ok = np.ones(len(fillings), dtype=bool)
    for i, j in roots(n):
        if i == j:
            continue
        kij = fillings[:, col[i, j]].astype(np.int16)
        for l in range(i, j):
            s = fillings[:, col[i, l]].astype(np.int16) + fillings[:, col[l + 1, j]]
            ok &= np.where(s < m, (kij == s) | (kij == s + 1), kij == m)
    return ok


def hook_mask(n: int, m: int, fillings: np.ndarray) -> np.ndarray:
    col = {r: t for t, r in enumerate(roots(n))}

    def box_col(r, c):
        return col[r, n - c + 1]

    ok = np.ones(len(fillings), dtype=bool)
    for i, j in roots(n):
        if i == j:
            continue
        corner = fillings[:, box_col(i, n - j + 1)].astype(np.int16)
        for a, b in hooks_on(n, i, j):
            e = fillings[:, box_col(*a)].astype(np.int16) + fillings[:, box_col(*b)]
            ok &= np.where(e < m, (corner == e) | (corner == e + 1), corner == m)
    return ok


def tableau_from_filling(n: int, m: int, filling: Sequence[int]) -> ShiTableau:
    return ShiTableau(n, m, _rows_from(n, dict(zip(roots(n), filling))))


def enumerate_regions(n: int, m: int) -> Iterator[ShiTableau]:
    """Yield every Shi tableau by backtracking in order of root height.

    When ``k_{i,j}`` is reached, all ``k_{i,l}`` and ``k_{l+1,j}`` are known,
    so its admissible values are the intersection of the per-``l`` sets.
    """
    _check_rank(n, m)
    order = roots(n)
    k: dict[tuple[int, int], int] = {}

    def candidates(i, j):
        allowed = set(range(m + 1))
        for l in range(i, j):
            s = k[i, l] + k[l + 1, j]
            allowed &= {s, s + 1} if s < m else {m}
            if not allowed:
                break
        return sorted(allowed)

    def fill(t):
        if t == len(order):
            yield ShiTableau(n, m, _rows_from(n, k))
            return
        i, j = order[t]
        for v in candidates(i, j):
            k[i, j] = v
            yield from fill(t + 1)
        del k[i, j]

    yield from fill(0)


def phi(t: ShiTableau) -> StaircasePartition:
    """Row sums: ``l_i = k_{i,i} + ... + k_{i,n}``."""
    return StaircasePartition(t.n, t.m, tuple(sum(row) for row in t.rows))


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def phi_inverse(p: StaircasePartition) -> ShiTableau:
    """Rebuild the Shi tableau of a partition.

    ``k_{i,j} = min(m, ceil((l_i - sum_{l>j} k_{i,l} + sum_{i<l<=j} k_{l,j}) / (j-i+1)))``,
    evaluated for ``i = n..1`` and, within a row, ``j = n..i`` so that every
    referenced entry already exists.
    """
    n, m = p.n, p.m
    k: dict[tuple[int, int], int] = {}
    for i in range(n, 0, -1):
        for j in range(n, i - 1, -1):
            right = sum(k[i, l] for l in range(j + 1, n + 1))
            below = sum(k[l, j] for l in range(i + 1, j + 1))
            k[i, j] = min(m, _ceil_div(p[i] - right + below, j - i + 1))
    return ShiTableau(n, m, _rows_from(n, k))


def wall_profile(t: ShiTableau) -> WallProfile:
    """Simple roots ``alpha_i`` whose hyperplane ``H_{alpha_i, m}`` separates
    the region from the origin, i.e. ``k_{i,i} = m``."""
    walls = frozenset(i for i in range(1, t.n + 1) if t.k(i, i) == t.m)
    return WallProfile(walls, not walls)


def subtableaux(t: ShiTableau):
    """The four derived tableaux ``(T1, T2, T3, T4)``.

    * ``T1``: top row removed, ``k1_{i,j} = k_{i+1,j+1}``.
    * ``T2``: leftmost staircase column (``j = n``) removed.
    * ``T3``: two leftmost columns removed; ``None`` when ``n == 2``.
    * ``T4``: second leftmost column and the bottom box of the leftmost one
      removed, so ``k4_{i,n-1} = k_{i,n}``.
    """
    n, m = t.n, t.m
    if n < 2:
        raise RankTooSmall(f"subtableaux need n >= 2, got {n}")
    t1 = ShiTableau(n - 1, m, t.rows[1:])
    t2 = ShiTableau(n - 1, m, tuple(row[:-1] for row in t.rows[:-1]))
    t3 = ShiTableau(n - 2, m, tuple(row[:-2] for row in t.rows[:-2])) if n >= 3 else None
    t4 = ShiTableau(n - 1, m, tuple(row[:-2] + row[-1:] for row in t.rows[:-1]))
    return t1, t2, t3, t4


def derived_partitions(p: StaircasePartition):
    """Partitions ``(p1, p2, p3, p4)`` whose tableaux are the subtableaux of
    ``phi_inverse(p)``; ``p3`` is ``None`` when ``n == 2``."""
    n, m = p.n, p.m
    if n < 2:
        raise RankTooSmall(f"derived partitions need n >= 2, got {n}")
    t = phi_inverse(p)
    l2 = [p[i] - t.k(i, n) for i in range(1, n)]
    l3 = [l2[i - 1] - t.k(i, n - 1) for i in range(1, n - 1)]
    l4 = [p[i] - t.k(i, n - 1) for i in range(1, n)]
    return (
        StaircasePartition(n - 1, m, p.parts[1:]),
        StaircasePartition(n - 1, m, tuple(l2)),
        StaircasePartition(n - 2, m, tuple(l3)) if n >= 3 else None,
        StaircasePartition(n - 1, m, tuple(l4)),
    )

