"""Partitions fitting inside the m-staircase of size n.

A partition ``(l_1, ..., l_n)`` belongs to the family when it is weakly
decreasing and ``l_i <= m*(n - i + 1)``.  Indices are 1-based in every
public function, matching the usual root-system conventions.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

from .exceptions import ExceedsStaircase, InvalidPartition, NotWeaklyDecreasing


def _check_rank(n: int, m: int) -> None:
    if n < 1 or m < 1:
        raise InvalidPartition(f"need n >= 1 and m >= 1, got n={n}, m={m}")


def staircase_bound(n: int, m: int, i: int) -> int:
    """Largest admissible value of the ``i``-th part."""
    return m * (n - i + 1)


@dataclass(frozen=True)
class StaircasePartition:
    n: int
    m: int
    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        _validate(self.parts, self.n, self.m)

    def __getitem__(self, i: int) -> int:
        """1-based part access."""
        if not 1 <= i <= self.n:
            raise IndexError(i)
        return self.parts[i - 1]

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return self.n

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m, "parts": list(self.parts)}

    @classmethod
    def from_json(cls, obj: dict) -> "StaircasePartition":
        return cls(int(obj["n"]), int(obj["m"]), tuple(obj["parts"]))


def _validate(parts: Sequence[int], n: int, m: int) -> None:
    _check_rank(n, m)
    if len(parts) != n:
        raise InvalidPartition(f"expected {n} parts, got {len(parts)}")
    if any(p < 0 for p in parts):
        raise InvalidPartition(f"negative part in {tuple(parts)}")
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise NotWeaklyDecreasing(f"{tuple(parts)} is not weakly decreasing")
    for i, p in enumerate(parts, start=1):
        bound = staircase_bound(n, m, i)
        if p > bound:
            raise ExceedsStaircase(i, p, bound)


def validate_partition(parts: Sequence[int], n: int, m: int) -> StaircasePartition:
    """Return ``parts`` as a :class:`StaircasePartition` or raise.

    >>> validate_partition((12, 9, 6, 3), 4, 3).parts
    (12, 9, 6, 3)
    """
    return StaircasePartition(n, m, tuple(parts))


def enumerate_partitions(n: int, m: int) -> Iterator[StaircasePartition]:
    """Yield every staircase partition, lexicographically decreasing."""
    _check_rank(n, m)
    prefix = [0] * n

    def fill(i: int, cap: int):
        # i is 0-based here
        if i == n:
            yield StaircasePartition(n, m, tuple(prefix))
            return
        for v in range(min(cap, m * (n - i)), -1, -1):
            prefix[i] = v
            yield from fill(i + 1, v)

    yield from fill(0, m * n)


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def count_partitions(n: int, m: int) -> int:
    """Fuss-Catalan number ``binom((m+1)(n+1), n+1) / (m(n+1)+1)``."""
    _check_rank(n, m)
    return _exact_div(comb((m + 1) * (n + 1), n + 1), m * (n + 1) + 1)


def count_positive(n: int, m: int) -> int:
    """Positive Fuss-Catalan number ``binom(m(n+1)+n-1, n) / (n+1)``.

    This counts the partitions with no part at its staircase bound.
    """
    _check_rank(n, m)
    return _exact_div(comb(m * (n + 1) + n - 1, n), n + 1)


def max_parts(p: StaircasePartition) -> frozenset[int]:
    """Indices ``i`` whose part equals the staircase bound ``m(n-i+1)``."""
    return frozenset(
        i for i, v in enumerate(p.parts, start=1) if v == staircase_bound(p.n, p.m, i)
    )


def to_lattice_path(p: StaircasePartition) -> str:
    """Encode ``p`` as a string of ``N``/``E`` steps from (0,0) to (mn, n).

    The ``r``-th north step is taken at abscissa ``l_{n-r+1}``, so the zero
    partition becomes ``N^n E^(mn)``.  The path stays weakly above the line
    ``y = x/m - 1`` and touches it (just before the ``r``-th north step)
    exactly when ``n-r+1`` is one of :func:`max_parts`.
    """
    steps = []
    x = 0
    for part in reversed(p.parts):
        steps.append("E" * (part - x))
        steps.append("N")
        x = part
    steps.append("E" * (p.m * p.n - x))
    return "".join(steps)


def from_lattice_path(path: str, n: int, m: int) -> StaircasePartition:
    """Inverse of :func:`to_lattice_path`."""
    if path.count("N") != n or path.count("E") != m * n or len(path) != n + m * n:
        raise InvalidPartition(f"path {path!r} is not a ({m * n}, {n}) lattice path")
    xs = []
    x = 0
    for step in path:
        if step == "E":
            x += 1
        elif step == "N":
            xs.append(x)
        else:
            raise InvalidPartition(f"unknown step {step!r}")
    return StaircasePartition(n, m, tuple(reversed(xs)))


def path_touches(path: str, m: int) -> list[tuple[int, int]]:
    """Lattice points of ``path`` lying on the line ``y = x/m - 1``."""
    pts = []
    x = y = 0
    for step in path:
        if m * (y + 1) == x:
            pts.append((x, y))
        if step == "E":
            x += 1
        else:
            y += 1
    if m * (y + 1) == x:
        pts.append((x, y))
    return pts
