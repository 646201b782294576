"""
Formula-versus-oracle verification sweeps.

Each sweep walks a small parameter range, evaluates the closed form and the
brute-force enumeration, and records one VerifyRow per comparison.
"""

import logging
from math import gcd
from typing import Any, Callable, Dict, List, Sequence, Tuple

from pydantic import BaseModel, Field

from .counting import (
    average_size_formula,
    cat,
    count_abc,
    count_largest,
    count_largest_exact,
    count_largest_second,
    count_single_window,
    count_ssd,
    count_ssd3,
    count_via_lattice,
)
from .errors import BudgetExceededError, InvariantViolation, PreconditionError
from .extremal import (
    construct_largest_selfconj_sss,
    largest_size_ab,
    largest_size_sss,
    largest_size_selfconj_sss,
    selfconj_gap,
)
from .oracle import EnumerationBudget, OracleStats, enumerate_cores_by_largest_part, oracle_stats
from .partitions import CoreSpec, conjugate, is_self_conjugate
from .schemas import VerifyReport, VerifyRow, as_rational

logger = logging.getLogger(__name__)


class SweepRanges(BaseModel):
    """Upper ends of the parameter ranges walked by the sweeps."""

    max_sum: int = Field(14, ge=4, description="Largest a+b for catalan, average and tripathi")
    max_s: int = Field(12, ge=2, description="Largest s for the (s, s+1, s+2) sweeps")
    max_a: int = Field(5, ge=2, description="Largest a for largest-part")
    max_x: int = Field(6, ge=0, description="Largest x for largest-part")
    max_lattice_a: int = Field(6, ge=2, description="Largest a for lattice")
    max_b0: int = Field(7, ge=2, description="Largest b0 for lattice")
    max_sd: int = Field(12, ge=3, description="Largest s+d for ssd")
    max_abc_a: int = Field(6, ge=4, description="Largest a for abc")
    max_abc_b: int = Field(9, ge=5, description="Largest b for abc")
    max_abc_c: int = Field(30, ge=2, description="Largest c for abc")


def _params(*values: object) -> str:
    return "(" + ",".join(str(v) for v in values) + ")"


def _row(theorem: str, params: Tuple[object, ...], formula: object, oracle: object) -> VerifyRow:
    return VerifyRow(
        theorem=theorem,
        params=_params(*params),
        formula=str(formula),
        oracle=str(oracle),
        match=formula == oracle,
    )


def _checked_row(theorem: str, params: Tuple[object, ...], formula: Callable[[], Any], oracle: object) -> VerifyRow:
    """Like _row, but a failed self-check inside the formula becomes a mismatch."""
    try:
        value = formula()
    except InvariantViolation as e:
        return _violation_row(theorem, params, e, oracle)
    return _row(theorem, params, value, oracle)


def _violation_row(theorem: str, params: Tuple[object, ...], error: InvariantViolation, oracle: object) -> VerifyRow:
    logger.warning(f"Sweep {theorem} {_params(*params)}: {error}")
    return VerifyRow(
        theorem=theorem,
        params=_params(*params),
        formula=f"invariant violation: {error}",
        oracle=str(oracle),
        match=False,
    )


class _Sweeper:
    def __init__(self, ranges: SweepRanges, ceiling: int, workers: int):
        self.ranges = ranges
        self.ceiling = ceiling
        self.workers = workers

    def stats(self, *moduli: int) -> OracleStats:
        spec = CoreSpec.of(*moduli)
        budget = EnumerationBudget.tripathi(spec)
        if budget.max_size > self.ceiling:
            raise BudgetExceededError(spec.moduli, budget.max_size, self.ceiling)
        return oracle_stats(spec, budget, workers=self.workers)

    def coprime_pairs(self) -> List[Tuple[int, int]]:
        top = self.ranges.max_sum
        return [(a, b) for a in range(2, top) for b in range(a + 1, top - a + 1) if gcd(a, b) == 1]

    def catalan(self) -> List[VerifyRow]:
        return [_row("catalan", (a, b), cat(a, b), self.stats(a, b).count) for a, b in self.coprime_pairs()]

    def average(self) -> List[VerifyRow]:
        return [
            _row("average", (a, b), as_rational(average_size_formula(a, b)), as_rational(self.stats(a, b).mean))
            for a, b in self.coprime_pairs()
        ]

    def tripathi(self) -> List[VerifyRow]:
        return [
            _row("tripathi", (a, b), largest_size_ab(a, b), self.stats(a, b).max_size_attained)
            for a, b in self.coprime_pairs()
        ]

    def sss(self) -> List[VerifyRow]:
        rows = []
        for s in range(2, self.ranges.max_s + 1):
            stats = self.stats(s, s + 1, s + 2)
            rows.append(_row("sss-largest", (s,), largest_size_sss(s), stats.max_size_attained))
            rows.append(_row("sss-selfconj", (s,), largest_size_selfconj_sss(s), stats.self_conjugate_max))
            rows.append(_row("sss-selfconj-unique", (s,), 1, len(stats.self_conjugate_maximizers)))

            rows.append(_checked_row(
                "sss-construct", (s,), lambda: construct_largest_selfconj_sss(s)[0], stats.self_conjugate_maximizers[0]
            ))

            maximizers = stats.maximizers
            if s % 2 == 0:
                shape = "self-conjugate" if len(maximizers) == 1 and is_self_conjugate(maximizers[0]) else "other"
                rows.append(_row("sss-maximizers", (s,), "self-conjugate", shape))
            else:
                paired = len(maximizers) == 2 and conjugate(maximizers[0]) == maximizers[1]
                rows.append(_row("sss-maximizers", (s,), "conjugate-pair", "conjugate-pair" if paired else "other"))
                rows.append(_row(
                    "sss-gap", (s,), selfconj_gap(s), stats.max_size_attained - stats.self_conjugate_max
                ))
        return rows

    def largest_part(self) -> List[VerifyRow]:
        rows = []
        for a in range(2, self.ranges.max_a + 1):
            running = 0
            for x in range(0, self.ranges.max_x + 1):
                found = enumerate_cores_by_largest_part(a, x)
                running += len(found)
                rows.append(_row("largest-part", (a, x), count_largest(a, x), len(found)))
                rows.append(_row(
                    "largest-part-cumulative", (a, x), sum(count_largest(a, t) for t in range(x + 1)), running
                ))
                if x == 0:
                    continue
                for i in range(1, a + 1):
                    actual = sum(1 for p in found if sum(1 for part in p.parts if part == x) == i)
                    rows.append(_row("largest-part-multiplicity", (a, x, i), count_largest_exact(a, x, i), actual))
                for y in range(1, x + 1):
                    actual = sum(1 for p in found if p.length >= 2 and p.parts[1] == y)
                    rows.append(_row("largest-part-second", (a, x, y), count_largest_second(a, x, y), actual))
        return rows

    def lattice(self) -> List[VerifyRow]:
        rows = []
        for a in range(2, self.ranges.max_lattice_a + 1):
            for b0 in range(2, self.ranges.max_b0 + 1):
                if gcd(a, b0) != 1:
                    continue
                extras: List[Tuple[int, ...]] = [()]
                extras += [(b,) for b in range(2, b0 + a + 1) if b % a and b != b0]
                extras += [(b, b + 1) for b in range(b0 + 1, b0 + a) if b % a and (b + 1) % a]
                for rest in extras:
                    stats = self.stats(a, b0, *rest)
                    rows.append(_checked_row(
                        "lattice",
                        (a, b0) + rest,
                        lambda: count_via_lattice(a, b0, rest, workers=self.workers),
                        stats.count,
                    ))
        return rows

    def ssd(self) -> List[VerifyRow]:
        rows = []
        for total in range(3, self.ranges.max_sd + 1):
            for s in range(2, total):
                d = total - s
                if gcd(s, d) != 1:
                    continue
                three = self.stats(s, s + d, s + 2 * d).count
                rows.append(_checked_row("ssd", (s, d), lambda: count_ssd(s, d), three))
                rows.append(_checked_row(
                    "ssd-window", (s, d), lambda: count_single_window(s + d, s, s + 2 * d), three
                ))
                rows.append(_checked_row(
                    "ssd-lattice", (s, d), lambda: count_via_lattice(s + d, s, [s + 2 * d]), three
                ))
                four = self.stats(s, s + d, s + 2 * d, s + 3 * d).count
                rows.append(_checked_row("ssd3", (s, d), lambda: count_ssd3(s, d), four))
        return rows

    def abc(self) -> List[VerifyRow]:
        rows = []
        for a in range(4, self.ranges.max_abc_a + 1):
            for b in range(a + 1, self.ranges.max_abc_b + 1):
                if gcd(a, b) != 1:
                    continue
                for c in range(2, self.ranges.max_abc_c + 1):
                    try:
                        formula = count_abc(a, b, c)
                    except PreconditionError:
                        continue
                    except InvariantViolation as e:
                        rows.append(_violation_row("abc", (a, b, c), e, self.stats(a, b, c).count))
                        continue
                    rows.append(_row("abc", (a, b, c), formula, self.stats(a, b, c).count))
        return rows


_SWEEPS: Dict[str, Callable[[_Sweeper], List[VerifyRow]]] = {
    "catalan": _Sweeper.catalan,
    "average": _Sweeper.average,
    "tripathi": _Sweeper.tripathi,
    "sss": _Sweeper.sss,
    "largest-part": _Sweeper.largest_part,
    "lattice": _Sweeper.lattice,
    "ssd": _Sweeper.ssd,
    "abc": _Sweeper.abc,
}

THEOREMS: Tuple[str, ...] = tuple(_SWEEPS)


def verify_sweep(
    theorems: Sequence[str] = THEOREMS,
    ranges: SweepRanges = SweepRanges(),
    ceiling: int = 5000,
    workers: int = 1,
) -> VerifyReport:
    """
    Run the named sweeps and collect every comparison.

    Args:
        theorems: Names from THEOREMS
        ranges: Parameter ranges
        ceiling: Largest Tripathi bound any single enumeration may use
        workers: Process count passed to the oracle and the lattice search

    Returns:
        A VerifyReport; ``report.ok`` is False if any row mismatched

    Raises:
        PreconditionError: For an unknown theorem name
        BudgetExceededError: If some enumeration would exceed the ceiling
    """
    unknown = [name for name in theorems if name not in _SWEEPS]
    if unknown:
        raise PreconditionError("theorem must be one of " + ", ".join(THEOREMS), f"got {unknown}")

    sweeper = _Sweeper(ranges, ceiling, workers)
    report = VerifyReport()
    for name in theorems:
        rows = _SWEEPS[name](sweeper)
        mismatches = sum(1 for row in rows if not row.match)
        logger.info(f"Sweep {name}: {len(rows)} comparisons, {mismatches} mismatches")
        report.rows.extend(rows)
    return report
