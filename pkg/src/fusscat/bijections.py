"""Bijections between dissections, staircase partitions and Shi tableaux,
and the refined count of objects by their set of negative simple roots."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .dissections import (
    Dissection,
    LabeledPolygon,
    alternating_labeling,
    initial_points,
)
from .exceptions import FussCatalanError, WrongLabeling
from .partitions import StaircasePartition, count_partitions, count_positive
from .shi import ShiTableau, phi, phi_inverse


def psi(d: Dissection) -> StaircasePartition:
    """Initial points of a dissection of the alternating polygon."""
    if d.polygon.labeling != "alternating":
        raise WrongLabeling("psi expects the alternating labeling")
    return initial_points(d)


def psi_prime(d: Dissection) -> StaircasePartition:
    """Initial points under the standard labeling.  A bijection, but it does
    not send snake diagonals to saturated parts."""
    if d.polygon.labeling != "standard":
        raise WrongLabeling("psi_prime expects the standard labeling")
    return initial_points(d)


def psi_inverse(p: StaircasePartition, poly: LabeledPolygon | None = None) -> Dissection:
    """Cut off one (m+2)-gon per part, largest part first.

    At step ``t`` the vertex labeled ``l_t`` is joined to one of its two
    neighbours at distance ``m+1`` inside the surviving polygon, and the
    ``m`` vertices between them are discarded.  A side is admissible only if
    every discarded label exceeds ``l_t``; among admissible sides the larger
    endpoint label wins.  Labels are never renamed.
    """
    n, m = p.n, p.m
    poly = poly or alternating_labeling(n, m)
    if poly.labeling != "alternating" or (poly.n, poly.m) != (n, m):
        raise WrongLabeling("psi_inverse builds on the alternating polygon of the same size")
    alive = list(poly.ccw_labels)
    diags = []
    for part in p.parts:
        try:
            idx = alive.index(part)
        except ValueError:
            raise FussCatalanError(f"vertex {part} was cut away before its turn") from None
        size = len(alive)
        sides = []
        for sign in (1, -1):
            drop = [(idx + sign * s) % size for s in range(1, m + 1)]
            if all(alive[x] > part for x in drop):
                sides.append((alive[(idx + sign * (m + 1)) % size], drop))
        if not sides:
            raise FussCatalanError(f"no admissible ear at vertex {part}")
        other, drop = max(sides)
        diags.append((part, other))
        dropped = set(drop)
        alive = [lab for pos, lab in enumerate(alive) if pos not in dropped]
    return Dissection(poly, frozenset(diags))


def omega(d: Dissection) -> ShiTableau:
    return phi_inverse(psi(d))


def omega_inverse(t: ShiTableau) -> Dissection:
    return psi_inverse(phi(t))


def parabolic_components(n: int, complement: Iterable[int]) -> list[int]:
    """Lengths of the maximal runs of consecutive integers in ``complement``.

    >>> parabolic_components(5, {1, 2, 4})
    [2, 1]
    """
    members = sorted(set(complement))
    if any(not 1 <= i <= n for i in members):
        raise ValueError(f"{members} is not a subset of [1..{n}]")
    runs = []
    prev = None
    for i in members:
        if prev is not None and i == prev + 1:
            runs[-1] += 1
        else:
            runs.append(1)
        prev = i
    return runs


def refined_count(n: int, m: int, J: Iterable[int]) -> int:
    """Number of objects whose negative simple roots (or simple separating
    walls, or saturated parts) are exactly ``J``: a product of positive
    Fuss-Catalan numbers over the runs of ``[n] - J``."""
    J = set(J)
    if any(not 1 <= i <= n for i in J):
        raise ValueError(f"{sorted(J)} is not a subset of [1..{n}]")
    total = 1
    for r in parabolic_components(n, set(range(1, n + 1)) - J):
        total *= count_positive(r, m)
    return total


def subsets(n: int) -> list[frozenset[int]]:
    """All subsets of ``[n]``, by size then lexicographically."""
    return [frozenset(c) for k in range(n + 1) for c in combinations(range(1, n + 1), k)]


@dataclass(frozen=True)
class RefinedCountTable:
    n: int
    m: int
    entries: dict[frozenset[int], int] = field(hash=False)

    def __getitem__(self, J) -> int:
        return self.entries.get(frozenset(J), 0)

    def total(self) -> int:
        return sum(self.entries.values())

    def to_json(self) -> dict:
        rows = [
            {"J": sorted(J), "count": str(self.entries[J])}
            for J in sorted(self.entries, key=lambda s: (len(s), sorted(s)))
        ]
        return {"n": self.n, "m": self.m, "rows": rows}

    @classmethod
    def from_json(cls, obj: dict) -> "RefinedCountTable":
        entries = {frozenset(int(i) for i in row["J"]): int(row["count"]) for row in obj["rows"]}
        return cls(int(obj["n"]), int(obj["m"]), entries)


def refined_count_table(n: int, m: int) -> RefinedCountTable:
    table = RefinedCountTable(n, m, {J: refined_count(n, m, J) for J in subsets(n)})
    assert table.total() == count_partitions(n, m)
    return table
