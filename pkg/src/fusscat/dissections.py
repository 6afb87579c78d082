"""m-dissections of the (m(n+1)+2)-gon, the facets of the generalized cluster
complex of type A_n.

Vertices are addressed by *position* (0..N-1, counterclockwise) for geometry
and by *label* for everything the user sees.  Two labelings are supported:
``standard`` (label = position) and ``alternating``, where labels ``k`` with
``k // m`` even run counterclockwise from 0 and the others run clockwise.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Optional

from .exceptions import (
    InvalidDissection,
    NonConsecutiveCrossing,
    NotAnMDiagonal,
    UnknownLabel,
)
from .partitions import StaircasePartition, _check_rank

LABELINGS = ("standard", "alternating")


@dataclass(frozen=True)
class LabeledPolygon:
    n: int
    m: int
    labeling: str
    ccw_labels: tuple[int, ...]

    @property
    def vertex_count(self) -> int:
        return len(self.ccw_labels)

    def position(self, label: int) -> int:
        try:
            return _positions(self.ccw_labels)[label]
        except KeyError:
            raise UnknownLabel(f"label {label} is not a vertex of this polygon") from None

    def label(self, position: int) -> int:
        return self.ccw_labels[position % self.vertex_count]


@lru_cache(maxsize=None)
def _positions(ccw_labels: tuple[int, ...]) -> dict[int, int]:
    return {lab: pos for pos, lab in enumerate(ccw_labels)}


def standard_labeling(n: int, m: int) -> LabeledPolygon:
    _check_rank(n, m)
    return LabeledPolygon(n, m, "standard", tuple(range(m * (n + 1) + 2)))


def alternating_labeling(n: int, m: int) -> LabeledPolygon:
    """Label 0 at position 0; labels with even ``k // m`` fill positions
    1, 2, ... counterclockwise in increasing order, labels with odd ``k // m``
    fill positions N-1, N-2, ... (clockwise) in increasing order."""
    _check_rank(n, m)
    size = m * (n + 1) + 2
    ccw = [0] * size
    right = [k for k in range(1, size) if (k // m) % 2 == 0]
    left = [k for k in range(1, size) if (k // m) % 2 == 1]
    for pos, k in enumerate(right, start=1):
        ccw[pos] = k
    for step, k in enumerate(left, start=1):
        ccw[size - step] = k
    return LabeledPolygon(n, m, "alternating", tuple(ccw))


def polygon(n: int, m: int, labeling: str = "alternating") -> LabeledPolygon:
    if labeling == "standard":
        return standard_labeling(n, m)
    if labeling == "alternating":
        return alternating_labeling(n, m)
    raise ValueError(f"unknown labeling {labeling!r}; expected one of {LABELINGS}")


def _pair(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def is_m_diagonal(poly: LabeledPolygon, a: int, b: int) -> bool:
    """True iff ``{a, b}`` is a diagonal cutting off pieces whose vertex counts
    are both congruent to 2 mod m (position gap congruent to 1 mod m)."""
    if a == b:
        raise ValueError("endpoints must differ")
    size = poly.vertex_count
    d = (poly.position(b) - poly.position(a)) % size
    if d in (1, size - 1):
        return False
    return (d - 1) % poly.m == 0


def diagonals_cross(poly: LabeledPolygon, d1: Iterable[int], d2: Iterable[int]) -> bool:
    """Strict interleaving of endpoint positions; shared endpoints never cross."""
    a, b = sorted(poly.position(x) for x in d1)
    c, d = sorted(poly.position(x) for x in d2)
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


@dataclass(frozen=True)
class Dissection:
    """A maximal set of ``n`` pairwise noncrossing m-diagonals.

    Diagonals are stored as label pairs, smaller label first.
    """

    polygon: LabeledPolygon
    diagonals: frozenset[tuple[int, int]]

    def __post_init__(self):
        diags = frozenset(_pair(*map(int, d)) for d in self.diagonals)
        object.__setattr__(self, "diagonals", diags)
        poly = self.polygon
        if len(diags) != poly.n:
            raise InvalidDissection(f"expected {poly.n} diagonals, got {len(diags)}")
        for d in diags:
            if not is_m_diagonal(poly, *d):
                raise NotAnMDiagonal(f"{d} is not an {poly.m}-diagonal")
        ds = sorted(diags)
        for x in range(len(ds)):
            for y in range(x + 1, len(ds)):
                if diagonals_cross(poly, ds[x], ds[y]):
                    raise InvalidDissection(f"diagonals {ds[x]} and {ds[y]} cross")

    @property
    def n(self) -> int:
        return self.polygon.n

    @property
    def m(self) -> int:
        return self.polygon.m

    def sorted_diagonals(self) -> list[tuple[int, int]]:
        return sorted(self.diagonals)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "labeling": self.polygon.labeling,
            "diagonals": [list(d) for d in self.sorted_diagonals()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Dissection":
        poly = polygon(int(obj["n"]), int(obj["m"]), obj["labeling"])
        pairs = [tuple(d) for d in obj["diagonals"]]
        if any(len(d) != 2 for d in pairs):
            raise InvalidDissection("each diagonal needs exactly two endpoints")
        return cls(poly, frozenset(pairs))


@lru_cache(maxsize=None)
def _angulations(size: int, m: int) -> tuple[frozenset, ...]:
    """All (m+2)-angulations of the polygon with positions ``0..size-1``.

    The cell on the base edge ``(0, size-1)`` has ``m+2`` corners; every gap
    between consecutive corners is either a polygon edge or a diagonal
    closing off a smaller polygon, which is dissected recursively.
    """
    if size <= m + 2:
        return (frozenset(),)
    extra = (size - 2) // m - 1  # cells beyond the base cell

    def compositions(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    out = []
    for comp in compositions(extra, m + 1):
        corner = 0
        pieces = []
        for a in comp:
            gap = 1 + m * a
            if a:
                shift = corner
                sub = [
                    frozenset({(p + shift, q + shift) for p, q in s})
                    for s in _angulations(gap + 1, m)
                ]
                pieces.append([s | {(shift, shift + gap)} for s in sub])
            corner += gap
        for combo in product(*pieces):
            out.append(frozenset().union(*combo))
    return tuple(out)


def enumerate_dissections(n: int, m: int, labeling: str = "alternating") -> Iterator[Dissection]:
    """Yield every m-dissection of the labeled polygon exactly once."""
    poly = polygon(n, m, labeling)
    for diags in _angulations(poly.vertex_count, m):
        yield Dissection(poly, frozenset(_pair(poly.label(p), poly.label(q)) for p, q in diags))


def all_m_diagonals(poly: LabeledPolygon) -> list[tuple[int, int]]:
    size = poly.vertex_count
    out = []
    for p in range(size):
        for q in range(p + 2, size):
            if (p, q) != (0, size - 1) and (q - p - 1) % poly.m == 0:
                out.append(_pair(poly.label(p), poly.label(q)))
    return sorted(out)


def snake_diagonals(poly: LabeledPolygon) -> list[tuple[int, int]]:
    """Diagonals of the negative simple roots; entry ``i-1`` is ``-alpha_i``."""
    n, m = poly.n, poly.m
    if poly.labeling == "alternating":
        return [_pair((n - i + 1) * m, (n - i + 2) * m) for i in range(1, n + 1)]
    out = []
    for idx in range(1, n + 1):
        if idx % 2:
            i = (idx + 1) // 2
            out.append(_pair((i - 1) * m, (n + 1 - i) * m + 1))
        else:
            i = idx // 2
            out.append(_pair(i * m, (n + 1 - i) * m + 1))
    return out


def negative_roots_contained(d: Dissection) -> frozenset[int]:
    snake = snake_diagonals(d.polygon)
    return frozenset(i for i, s in enumerate(snake, start=1) if s in d.diagonals)


def snake_dissection(poly: LabeledPolygon) -> Dissection:
    return Dissection(poly, frozenset(snake_diagonals(poly)))


def fan_dissection(poly: LabeledPolygon, apex: int) -> Dissection:
    """All m-diagonals from the vertex labeled ``apex`` to the vertices
    ``m+1, 2m+1, ..., nm+1`` steps counterclockwise."""
    p = poly.position(apex)
    diags = {_pair(apex, poly.label(p + 1 + poly.m * t)) for t in range(1, poly.n + 1)}
    return Dissection(poly, frozenset(diags))


@dataclass(frozen=True)
class ColoredRoot:
    """``-alpha_i`` (kind ``negative``) or ``alpha^color_{ij}`` (kind ``positive``)."""

    kind: str
    i: int
    j: int
    color: Optional[int] = None

    def __post_init__(self):
        if self.kind == "negative" and (self.i != self.j or self.color is not None):
            raise ValueError("a negative simple root has i == j and no color")
        if self.kind == "positive" and self.color is None:
            raise ValueError("a colored positive root needs a color")

    def __str__(self):
        if self.kind == "negative":
            return f"-a{self.i}"
        return f"a^{self.color}_{self.i}{self.j}"


def _crossed_segment(poly: LabeledPolygon, diag, snake) -> tuple[int, int]:
    hit = [i for i, s in enumerate(snake, start=1) if diagonals_cross(poly, diag, s)]
    if not hit or hit != list(range(hit[0], hit[-1] + 1)):
        raise NonConsecutiveCrossing(f"{diag} crosses snake diagonals {hit}")
    return hit[0], hit[-1]


def _clockwise_key(poly: LabeledPolygon, diag):
    # clockwise = decreasing position; compare endpoints furthest along first
    p, q = sorted(poly.position(x) for x in diag)
    return (-q, -p)


@lru_cache(maxsize=None)
def colored_root_table(poly: LabeledPolygon) -> dict[tuple[int, int], ColoredRoot]:
    """Map every m-diagonal of ``poly`` to its colored almost positive root.

    The diagonals crossing exactly the snake segment ``-alpha_i..-alpha_j``
    are colored ``1..m`` in clockwise order; there must be exactly ``m`` of
    them for each segment.
    """
    snake = snake_diagonals(poly)
    table: dict[tuple[int, int], ColoredRoot] = {}
    groups: dict[tuple[int, int], list] = {}
    for i, s in enumerate(snake, start=1):
        table[s] = ColoredRoot("negative", i, i)
    for diag in all_m_diagonals(poly):
        if diag in table:
            continue
        groups.setdefault(_crossed_segment(poly, diag, snake), []).append(diag)
    for (i, j), diags in groups.items():
        if len(diags) != poly.m:
            raise NonConsecutiveCrossing(
                f"segment {i}..{j} is crossed by {len(diags)} m-diagonals, expected {poly.m}"
            )
        for color, diag in enumerate(sorted(diags, key=lambda d: _clockwise_key(poly, d)), 1):
            table[diag] = ColoredRoot("positive", i, j, color)
    return table


def diagonal_to_colored_root(poly: LabeledPolygon, a: int, b: int) -> ColoredRoot:
    if a == b or not is_m_diagonal(poly, a, b):
        raise NotAnMDiagonal(f"{(a, b)} is not an {poly.m}-diagonal")
    return colored_root_table(poly)[_pair(a, b)]


def initial_points(d: Dissection) -> StaircasePartition:
    """Smaller label of each diagonal, sorted decreasingly."""
    return StaircasePartition(d.n, d.m, tuple(sorted((a for a, _ in d.diagonals), reverse=True)))
