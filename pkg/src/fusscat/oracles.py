"""Brute-force oracles, independent of the enumerators they validate.

Each oracle either filters a complete candidate space or samples the
arrangement geometrically, so a bug in the fast path cannot be shared.
"""
from __future__ import annotations

from collections import Counter

import numpy as np

from .bijections import RefinedCountTable, psi, refined_count, subsets
from .dissections import Dissection, enumerate_dissections, negative_roots_contained
from .exceptions import InstanceTooLarge, NotFound
from .partitions import StaircasePartition
from .shi import (
    ShiTableau,
    all_fillings,
    enumerate_regions,
    roots,
    shi_mask,
    tableau_from_filling,
    wall_profile,
)

FILLING_LIMIT = 10**7
GRID_POINT_LIMIT = 2 * 10**7


def exhaustive_tableaux(n: int, m: int, limit: int = FILLING_LIMIT) -> set[ShiTableau]:
    """Filter every filling of ``[0, m]^{n(n+1)/2}`` through the Shi conditions."""
    total = (m + 1) ** (n * (n + 1) // 2)
    if total > limit:
        raise InstanceTooLarge(f"{total} candidate fillings exceeds the limit {limit}")
    fillings = all_fillings(n, m)
    keep = fillings[shi_mask(n, m, fillings)]
    return {tableau_from_filling(n, m, row) for row in keep.tolist()}


def _grid_tableaux(n: int, m: int, resolution: int) -> set[tuple[int, ...]]:
    side = (m + 1) * resolution
    if side**n > GRID_POINT_LIMIT:
        raise InstanceTooLarge(f"{side**n} grid points exceeds the limit {GRID_POINT_LIMIT}")
    order = roots(n)
    found: set[tuple[int, ...]] = set()
    axis = np.arange(1, side + 1, dtype=np.int64)
    # slice on the first coordinate to bound memory
    if n > 1:
        mesh = np.meshgrid(*([axis] * (n - 1)), indexing="ij")
        rest = np.stack(mesh, axis=-1).reshape(-1, n - 1)
    else:
        rest = np.empty((1, 0), np.int64)
    for c1 in axis:
        pts = np.concatenate([np.full((len(rest), 1), c1), rest], axis=1)
        prefix = np.concatenate([np.zeros((len(pts), 1), np.int64), np.cumsum(pts, axis=1)], axis=1)
        cols = []
        keep = np.ones(len(pts), dtype=bool)
        for i, j in order:
            s = prefix[:, j] - prefix[:, i - 1]
            keep &= s % resolution != 0
            cols.append(np.minimum(m, s // resolution))
        if keep.any():
            ks = np.stack(cols, axis=1)[keep]
            found.update(map(tuple, np.unique(ks, axis=0).tolist()))
    return found


def grid_region_oracle(n: int, m: int, resolution: int | None = None) -> set[ShiTableau]:
    """Shi tableaux of the regions met by a rational grid in simple-root coordinates.

    Points ``y_i = c_i / resolution`` with ``1 <= c_i <= (m+1) resolution``
    are kept when no consecutive sum ``y_i + ... + y_j`` is an integer; each
    kept point yields ``k_{i,j} = min(m, floor(y_i + ... + y_j))``.  With
    ``resolution=None`` the resolution starts at ``2(n+1)`` and doubles until
    the number of regions has not changed for two consecutive doublings.
    """
    if resolution is None:
        raw, _ = grid_regions_stabilized(n, m)
    else:
        raw = _grid_tableaux(n, m, resolution)
    return {tableau_from_filling(n, m, row) for row in raw}


def grid_regions_stabilized(n: int, m: int) -> tuple[set[tuple[int, ...]], int]:
    res = 2 * (n + 1)
    found = _grid_tableaux(n, m, res)
    history = [len(found)]
    while len(history) < 3 or len(set(history[-3:])) > 1:
        res *= 2
        found = _grid_tableaux(n, m, res)
        history.append(len(found))
    return found, res


def exhaustive_psi_inverse(p: StaircasePartition, max_n: int = 4, max_m: int = 3) -> Dissection:
    """Linear search for the dissection whose initial points are ``p``."""
    if p.n > max_n or p.m > max_m:
        raise InstanceTooLarge(f"search inverse limited to n <= {max_n}, m <= {max_m}")
    for d in enumerate_dissections(p.n, p.m, "alternating"):
        if psi(d) == p:
            return d
    raise NotFound(f"no dissection has initial points {p.parts}")


def exhaustive_refined_counts(n: int, m: int) -> tuple[RefinedCountTable, RefinedCountTable]:
    """Tally dissections by contained negative simple roots and tableaux by
    simple separating walls."""
    diss = Counter(negative_roots_contained(d) for d in enumerate_dissections(n, m, "alternating"))
    regs = Counter(wall_profile(t).simple_walls for t in enumerate_regions(n, m))
    keys = subsets(n)
    return (
        RefinedCountTable(n, m, {J: diss.get(J, 0) for J in keys}),
        RefinedCountTable(n, m, {J: regs.get(J, 0) for J in keys}),
    )


def verdict(check: str, n: int, m: int, ok: bool, details=None) -> dict:
    return {"check": check, "n": n, "m": m, "status": "ok" if ok else "mismatch", "details": details}


def refined_counts_agree(n: int, m: int) -> bool:
    diss, regs = exhaustive_refined_counts(n, m)
    return all(diss[J] == regs[J] == refined_count(n, m, J) for J in subsets(n))
