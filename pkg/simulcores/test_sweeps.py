"""
Tests for the verification sweeps, on small ranges.
"""

import pytest

from simulcores.errors import BudgetExceededError, PreconditionError
from simulcores.sweeps import THEOREMS, SweepRanges, verify_sweep

SMALL = SweepRanges(
    max_sum=10,
    max_s=7,
    max_a=4,
    max_lattice_a=4,
    max_x=5,
    max_b0=5,
    max_sd=9,
    max_abc_a=5,
    max_abc_b=7,
    max_abc_c=20,
)


@pytest.mark.parametrize("theorem", THEOREMS)
def test_each_sweep_matches(theorem):
    report = verify_sweep([theorem], SMALL)
    assert report.rows
    assert report.ok, report.first_mismatch


def test_rows_carry_formula_and_oracle_values():
    report = verify_sweep(["catalan"], SweepRanges(max_sum=7))
    row = next(row for row in report.rows if row.params == "(3,4)")
    assert (row.formula, row.oracle, row.match) == ("5", "5", True)
    average = verify_sweep(["average"], SweepRanges(max_sum=5)).rows
    assert [(r.params, r.formula) for r in average] == [("(2,3)", "1/2")]


def test_budget_ceiling():
    with pytest.raises(BudgetExceededError) as excinfo:
        verify_sweep(["catalan"], SweepRanges(max_sum=12), ceiling=20)
    assert excinfo.value.bound > 20
    assert excinfo.value.ceiling == 20


def test_unknown_theorem():
    with pytest.raises(PreconditionError, match="theorem must be one of"):
        verify_sweep(["riemann"])


def test_default_ranges_cover_the_full_sweep():
    ranges = SweepRanges(
        max_sum=14,
        max_s=12,
        max_a=5,
        max_x=6,
        max_lattice_a=6,
        max_b0=7,
        max_sd=12,
        max_abc_a=6,
        max_abc_b=9,
        max_abc_c=30,
    )
    assert ranges == SweepRanges()

    report = verify_sweep(THEOREMS, ranges)
    assert report.ok, report.first_mismatch

    seen = {(row.theorem, row.params) for row in report.rows}
    assert ("catalan", "(5,9)") in seen
    assert ("tripathi", "(5,7)") in seen
    assert ("sss-maximizers", "(11)") in seen
    assert ("sss-construct", "(12)") in seen
    assert ("largest-part-second", "(5,6,6)") in seen
    assert ("lattice", "(6,7)") in seen
    assert ("abc", "(6,7,28)") in seen
    assert ("ssd3", "(11,1)") in seen


def test_failed_self_check_is_reported_as_a_mismatch(monkeypatch):
    monkeypatch.setattr("simulcores.extremal.largest_size_selfconj_sss", lambda s: 0)
    report = verify_sweep(["sss"], SweepRanges(max_s=4))
    assert not report.ok
    built = [row for row in report.rows if row.theorem == "sss-construct"]
    assert [row.params for row in built] == ["(2)", "(3)", "(4)"]
    assert all(not row.match and row.formula.startswith("invariant violation") for row in built)
    assert all(row.match for row in report.rows if row.theorem == "sss-largest")


def test_lattice_self_check_is_reported_as_a_mismatch(monkeypatch):
    monkeypatch.setattr("simulcores.counting.count_window_solutions", lambda *args, **kwargs: -1)
    report = verify_sweep(["lattice"], SweepRanges(max_lattice_a=3, max_b0=4))
    assert report.rows
    assert not any(row.match for row in report.rows)
    assert report.first_mismatch.params == "(2,3)"
    assert "lattice count mismatch" in report.first_mismatch.formula
