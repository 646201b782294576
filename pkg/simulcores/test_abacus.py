"""
Tests for the tilted abacus and the c- and x-coordinate core criteria.
"""

from fractions import Fraction
from itertools import product

import pytest
from pydantic import ValidationError

from simulcores.abacus import (
    CCoords,
    XCoords,
    c_to_partition,
    c_to_x,
    is_bcore_c,
    is_bcore_x,
    is_selfconjugate_c,
    partition_to_c,
    partition_to_x,
    size_from_c,
    x_to_c,
    x_to_partition,
)
from simulcores.errors import NotACoreError, PreconditionError
from simulcores.partitions import Partition, hook_lengths, is_self_conjugate, is_t_core, partitions_of


def zero_sum_vectors(a: int, low: int, high: int):
    for head in product(range(low, high + 1), repeat=a - 1):
        last = -sum(head)
        if low <= last <= high:
            yield head + (last,)


def test_worked_example():
    p = Partition((9, 6, 3, 1, 1, 1))
    coords = partition_to_c(p, 4)
    assert coords.c == (1, 2, 0, -3)
    assert c_to_partition(coords) == p
    assert size_from_c(coords) == 21
    assert c_to_x(coords).num2a == (5, 15, 1, -21)


def test_small_cases():
    assert partition_to_c(Partition(()), 5).c == (0, 0, 0, 0, 0)
    assert partition_to_c(Partition((1,)), 2).c == (1, -1)
    assert c_to_x(CCoords(a=2, c=(0, 0))).num2a == (-1, 1)
    assert c_to_x(CCoords(a=2, c=(0, 0))).values() == [Fraction(-1, 4), Fraction(1, 4)]


def test_non_core_is_rejected():
    with pytest.raises(NotACoreError, match="not an a-core"):
        partition_to_c(Partition((2,)), 2)
    with pytest.raises(NotACoreError):
        partition_to_c(Partition((9, 6, 3, 1, 1, 1)), 3)


def test_coordinate_validation():
    with pytest.raises(ValidationError):
        CCoords(a=3, c=(1, 0, 0))
    with pytest.raises(ValidationError):
        CCoords(a=3, c=(1, -1))
    with pytest.raises(ValidationError):
        XCoords(a=2, num2a=(0, 0))
    with pytest.raises(PreconditionError):
        is_bcore_c(CCoords(a=2, c=(0, 0)), 0)


def test_partition_round_trip_over_all_small_cores():
    for n in range(13):
        for p in partitions_of(n):
            for a in range(2, 6):
                if not is_t_core(p, a):
                    continue
                coords = partition_to_c(p, a)
                assert c_to_partition(coords) == p
                assert size_from_c(coords) == n
                assert x_to_partition(partition_to_x(p, a)) == p


@pytest.mark.parametrize("a", [2, 3, 4, 5, 6])
def test_coordinate_criteria_match_hook_lengths(a):
    """Exhaustive over c in [-3, 3]^a and b <= 12."""
    for c in zero_sum_vectors(a, -3, 3):
        coords = CCoords(a=a, c=c)
        p = c_to_partition(coords)
        assert partition_to_c(p, a) == coords
        assert size_from_c(coords) == p.size
        assert is_selfconjugate_c(coords) == is_self_conjugate(p)

        x = c_to_x(coords)
        assert x_to_c(x) == coords
        hooks = set(hook_lengths(p))
        for b in range(1, 13):
            by_hooks = all(h % b for h in hooks)
            assert is_bcore_c(coords, b) == by_hooks, (c, b)
            assert is_bcore_x(x, b) == by_hooks, (c, b)
