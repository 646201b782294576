"""
Tests for the closed-form counts, against hand values and the oracle.
"""

from fractions import Fraction
from math import gcd

import pytest

from simulcores.counting import (
    average_size_formula,
    binom,
    cat,
    count_abc,
    count_cores_by_lattice,
    count_largest,
    count_largest_exact,
    count_largest_second,
    count_lower_bounded_solutions,
    count_single_window,
    count_ssd,
    count_ssd3,
    count_via_lattice,
    lattice_parameters,
)
from simulcores.errors import NotCoprimeError, PreconditionError
from simulcores.extremal import largest_size_ab
from simulcores.oracle import enumerate_cores, oracle_stats
from simulcores.partitions import CoreSpec


def test_binom_convention():
    assert binom(5, 2) == 10
    assert binom(2, -1) == 0
    assert binom(-1, 0) == 0
    assert binom(3, 5) == 0
    assert binom(0, 0) == 1


def test_count_lower_bounded_solutions():
    assert count_lower_bounded_solutions(2, [0, 0, 0]) == 6
    assert count_lower_bounded_solutions(0, [0, 0, 0, 0]) == 1
    assert count_lower_bounded_solutions(3, [1, 1, 1]) == 1
    assert count_lower_bounded_solutions(2, [1, 1, 1]) == 0


def test_cat():
    assert cat(2, 3) == 2
    assert cat(3, 4) == 5
    assert cat(4, 5) == 14
    assert [cat(n, n + 1) for n in range(1, 7)] == [1, 2, 5, 14, 42, 132]
    with pytest.raises(NotCoprimeError):
        cat(2, 4)


def test_largest_part_counts():
    assert count_largest_exact(3, 2, 1) == 2
    assert count_largest_exact(3, 2, 2) == 1
    assert count_largest_exact(3, 2, 3) == 0
    assert count_largest(3, 2) == 3
    assert count_largest(2, 3) == 1
    assert count_largest(7, 0) == 1
    assert count_largest_second(3, 2, 1) == 1
    assert count_largest_second(3, 3, 1) == 2
    assert count_largest_second(3, 5, 1) == 0
    with pytest.raises(PreconditionError, match="1 <= y <= x"):
        count_largest_second(3, 2, 0)
    with pytest.raises(PreconditionError):
        count_largest_exact(3, 0, 1)


def test_largest_sums_over_multiplicity():
    for a in range(2, 8):
        for x in range(1, 10):
            assert count_largest(a, x) == sum(count_largest_exact(a, x, i) for i in range(1, a + 1))


def test_lattice_counts():
    assert count_via_lattice(3, 2, []) == 2
    assert count_via_lattice(3, 2, [4]) == 2
    assert count_via_lattice(4, 3, [5]) == 4
    with pytest.raises(NotCoprimeError):
        count_via_lattice(4, 2, [])
    with pytest.raises(PreconditionError, match="multiple of a"):
        count_via_lattice(4, 3, [8])


def test_single_window():
    assert count_single_window(4, 3, 5) == 4
    assert count_single_window(3, 2, 4) == 2
    with pytest.raises(PreconditionError, match="a must divide b0\\+b1"):
        count_single_window(4, 3, 6)


def test_ssd_families():
    assert count_ssd(3, 1) == 4
    assert count_ssd(2, 1) == 2
    assert count_ssd(1, 5) == 1
    assert [count_ssd(s, 1) for s in range(1, 8)] == [1, 2, 4, 9, 21, 51, 127]
    assert count_ssd3(2, 1) == 2
    assert count_ssd3(3, 1) == 4
    assert count_ssd3(1, 1) == 1
    with pytest.raises(NotCoprimeError):
        count_ssd(2, 2)
    with pytest.raises(NotCoprimeError):
        count_ssd3(3, 6)


def test_specialisations_agree():
    for total in range(3, 12):
        for s in range(1, total):
            d = total - s
            if gcd(s, d) != 1:
                continue
            expected = count_ssd(s, d)
            assert count_single_window(s + d, s, s + 2 * d) == expected
            assert count_via_lattice(s + d, s, [s + 2 * d]) == expected


def test_count_abc():
    assert count_abc(4, 5, 6) == 9
    assert count_abc(4, 5, 14) == cat(4, 5) == 14
    assert count_abc(4, 5, 2) == 3


@pytest.mark.parametrize(
    "a,b,c,condition",
    [
        (4, 5, 7, "a must divide 2b+c"),
        (3, 5, 2, "a must be greater than 3"),
        (5, 4, 2, "b must be greater than a"),
        (6, 7, 4, "c must exceed ab/2-2b"),
    ],
)
def test_count_abc_preconditions(a, b, c, condition):
    with pytest.raises(PreconditionError) as excinfo:
        count_abc(a, b, c)
    assert excinfo.value.condition == condition


def test_count_abc_requires_coprime():
    with pytest.raises(NotCoprimeError):
        count_abc(4, 6, 4)


def test_average_size_formula():
    assert average_size_formula(3, 4) == 2
    assert average_size_formula(2, 3) == Fraction(1, 2)
    assert average_size_formula(1, 5) == 0
    with pytest.raises(NotCoprimeError):
        average_size_formula(4, 6)


def test_catalan_average_and_tripathi_against_oracle():
    for a in range(2, 13):
        for b in range(a + 1, 15 - a):
            if gcd(a, b) != 1:
                continue
            stats = oracle_stats(CoreSpec.of(a, b))
            assert stats.count == cat(a, b), (a, b)
            assert stats.mean == average_size_formula(a, b), (a, b)
            assert stats.max_size_attained == largest_size_ab(a, b), (a, b)


def test_count_cores_by_lattice():
    assert count_cores_by_lattice(CoreSpec.of(3, 4, 5)) == 4
    assert count_cores_by_lattice(CoreSpec.of(2, 3, 4, 5)) == 2
    assert lattice_parameters(CoreSpec.of(3, 4, 6, 7)) == (3, 4, [])
    assert lattice_parameters(CoreSpec.of(4, 5, 6)) == (4, 5, [6])
    with pytest.raises(PreconditionError, match="coprime pair"):
        count_cores_by_lattice(CoreSpec.of(4, 6))


@pytest.mark.parametrize(
    "moduli",
    [(3, 4, 5), (4, 5, 6), (4, 6, 7), (5, 6, 7, 8), (5, 7, 9), (6, 7, 8), (4, 7, 10), (3, 7)],
)
def test_lattice_count_matches_oracle(moduli):
    spec = CoreSpec(moduli=moduli)
    assert count_cores_by_lattice(spec) == len(enumerate_cores(spec))


def test_abc_matches_oracle():
    for a in range(4, 7):
        for b in range(a + 1, 10):
            if gcd(a, b) != 1:
                continue
            for c in range(2, 31):
                try:
                    formula = count_abc(a, b, c)
                except PreconditionError:
                    continue
                assert formula == len(enumerate_cores(CoreSpec.of(a, b, c))), (a, b, c)
