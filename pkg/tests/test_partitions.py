from math import comb

import pytest
from hypothesis import given

from conftest import brute_partitions, staircase_partitions
from fusscat.exceptions import ExceedsStaircase, InvalidPartition, NotWeaklyDecreasing
from fusscat.partitions import (
    StaircasePartition,
    count_partitions,
    count_positive,
    enumerate_partitions,
    from_lattice_path,
    max_parts,
    path_touches,
    to_lattice_path,
    validate_partition,
)


def test_validate_accepts_zero_and_saturated():
    assert validate_partition((0, 0), 2, 1).parts == (0, 0)
    assert validate_partition((12, 9, 6, 3), 4, 3).parts == (12, 9, 6, 3)


def test_validate_rejects():
    with pytest.raises(ExceedsStaircase) as exc:
        validate_partition((4, 3), 2, 1)
    assert exc.value.index == 1
    with pytest.raises(NotWeaklyDecreasing):
        validate_partition((0, 1), 2, 1)
    with pytest.raises(InvalidPartition):
        validate_partition((1,), 2, 1)
    with pytest.raises(InvalidPartition):
        validate_partition((1, -1), 2, 1)


def test_enumerate_small_cases():
    assert [p.parts for p in enumerate_partitions(1, 2)] == [(2,), (1,), (0,)]
    assert [p.parts for p in enumerate_partitions(2, 1)] == [(2, 1), (2, 0), (1, 1), (1, 0), (0, 0)]


@pytest.mark.parametrize("n", range(1, 6))
@pytest.mark.parametrize("m", range(1, 4))
def test_enumeration_matches_brute_force(n, m):
    got = [p.parts for p in enumerate_partitions(n, m)]
    assert got == sorted(brute_partitions(n, m), reverse=True)
    assert len(got) == count_partitions(n, m)


@pytest.mark.parametrize(
    "n, m, expected",
    # frozen from brute_partitions
    [(2, 1, 5), (2, 3, 22), (3, 2, 55), (4, 3, 969), (5, 3, 7084)],
)
def test_count_partitions(n, m, expected):
    assert count_partitions(n, m) == expected
    assert comb((m + 1) * (n + 1), n + 1) == expected * (m * (n + 1) + 1)


@pytest.mark.parametrize(
    "n, m, expected",
    # frozen from brute force over partitions with no saturated part
    [(1, 1, 1), (1, 5, 5), (2, 1, 2), (2, 3, 15), (3, 2, 30), (4, 3, 612)],
)
def test_count_positive(n, m, expected):
    brute = sum(
        1 for t in brute_partitions(n, m) if all(v < m * (n - i) for i, v in enumerate(t))
    )
    assert brute == expected == count_positive(n, m)


def test_count_positive_rank_one_is_m():
    assert [count_positive(1, m) for m in range(1, 8)] == list(range(1, 8))


@pytest.mark.parametrize("n", range(1, 9))
@pytest.mark.parametrize("m", range(1, 6))
def test_counting_formulas_divide_exactly(n, m):
    # _exact_div raises on a nonzero remainder
    assert count_partitions(n, m) > 0
    assert count_positive(n, m) > 0


def test_max_parts():
    assert max_parts(StaircasePartition(3, 2, (0, 0, 0))) == frozenset()
    assert max_parts(StaircasePartition(4, 3, (12, 9, 6, 3))) == {1, 2, 3, 4}
    assert max_parts(StaircasePartition(2, 3, (6, 2))) == {1}


def test_lattice_path_examples():
    assert to_lattice_path(StaircasePartition(2, 1, (0, 0))) == "NNEE"
    assert to_lattice_path(StaircasePartition(2, 1, (2, 1))) == "ENEN"
    assert to_lattice_path(StaircasePartition(2, 1, (1, 0))) == "NENE"
    assert to_lattice_path(StaircasePartition(3, 2, (0, 0, 0))) == "NNNEEEEEE"


def _stays_above(path, m):
    x = y = 0
    for step in path:
        if step == "E":
            x += 1
        else:
            y += 1
        if x > m * (y + 1):
            return False
    return True


@pytest.mark.parametrize("n, m", [(n, m) for n in range(1, 6) for m in range(1, 4)])
def test_lattice_path_injective_and_above_line(n, m):
    paths = {}
    for p in enumerate_partitions(n, m):
        path = to_lattice_path(p)
        assert path.count("N") == n and path.count("E") == m * n
        assert _stays_above(path, m)
        touched = {n - y for _, y in path_touches(path, m)}
        assert touched == max_parts(p)
        paths[path] = p
    assert len(paths) == count_partitions(n, m)


@given(staircase_partitions())
def test_lattice_path_round_trip(p):
    assert from_lattice_path(to_lattice_path(p), p.n, p.m) == p


def test_json_round_trip():
    p = StaircasePartition(2, 3, (4, 2))
    assert p.to_json() == {"n": 2, "m": 3, "parts": [4, 2]}
    assert StaircasePartition.from_json(p.to_json()) == p
