"""
Brute-force enumeration of simultaneous cores from hook lengths alone.

Partitions are grown from the smallest part upward. Putting a new largest row
on top of a diagram leaves the hooks of every existing cell unchanged, and
deleting the largest row of a core leaves a core, so a prefix with a bad hook
can be discarded together with everything built on it.

Only ``partitions`` and ``errors`` are imported here.
"""

import csv
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import IO, Iterable, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from .errors import InfiniteFamilyError, PreconditionError
from .partitions import CoreSpec, Partition, is_self_conjugate, partitions_of, satisfies_spec, sort_key

logger = logging.getLogger(__name__)


class EnumerationBudget(BaseModel):
    """An inclusive size bound for an enumeration, and where it came from."""
    model_config = ConfigDict(frozen=True)

    max_size: int = Field(..., ge=0, description="Largest partition size searched")
    justification: Literal["explicit", "tripathi_bound"] = Field("explicit", description="Origin of the bound")

    @classmethod
    def explicit(cls, max_size: int) -> "EnumerationBudget":
        return cls(max_size=max_size, justification="explicit")

    @classmethod
    def tripathi(cls, spec: CoreSpec) -> "EnumerationBudget":
        """
        Smallest (a^2-1)(b^2-1)/24 over the coprime pairs of ``spec``.

        Raises:
            InfiniteFamilyError: If ``spec`` has no coprime pair
        """
        bounds = [(a * a - 1) * (b * b - 1) // 24 for a, b in spec.coprime_pairs()]
        if not bounds:
            raise InfiniteFamilyError(f"possibly infinite family: {spec} has no coprime pair")
        return cls(max_size=min(bounds), justification="tripathi_bound")


def _grow(
    moduli: Tuple[int, ...],
    parts: Tuple[int, ...],
    columns: Tuple[int, ...],
    size: int,
    max_size: Optional[int],
    max_part: Optional[int],
    found: List[Tuple[int, ...]],
) -> None:
    """Record ``parts`` and recurse on every admissible new largest row."""
    found.append(parts)
    first = parts[0] if parts else 0
    step = min(moduli)
    # a row more than step - 1 longer than the one below has a hook equal to step
    top = first + step - 1
    if max_part is not None:
        top = min(top, max_part)
    if max_size is not None:
        top = min(top, max_size - size)

    for p in range(max(first, 1), top + 1):
        ok = True
        for c in range(p):
            hook = p - c + (columns[c] if c < len(columns) else 0)
            if any(hook % m == 0 for m in moduli):
                ok = False
                break
        if not ok:
            continue
        widened = tuple(
            (columns[c] if c < len(columns) else 0) + 1 for c in range(p)
        ) + columns[p:]
        _grow(moduli, (p,) + parts, widened, size + p, max_size, max_part, found)


def _grow_from(moduli: Tuple[int, ...], smallest: int, max_size: Optional[int], max_part: Optional[int]) -> List[Tuple[int, ...]]:
    """All cores whose smallest part is ``smallest``."""
    found: List[Tuple[int, ...]] = []
    if any(h % m == 0 for m in moduli for h in range(1, smallest + 1)):
        return found
    _grow(moduli, (smallest,), (1,) * smallest, smallest, max_size, max_part, found)
    return found


def _enumerate(moduli: Tuple[int, ...], max_size: Optional[int], max_part: Optional[int], workers: int) -> List[Partition]:
    if max_size is None and max_part is None:
        raise InfiniteFamilyError(f"possibly infinite family: no size or part bound for moduli {list(moduli)}")
    top = min(moduli) - 1
    if max_part is not None:
        top = min(top, max_part)
    if max_size is not None:
        top = min(top, max_size)
    smallest_parts = range(1, top + 1)

    if workers > 1 and len(smallest_parts) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_grow_from, moduli, p, max_size, max_part) for p in smallest_parts]
            raw = [parts for future in futures for parts in future.result()]
    else:
        raw = [parts for p in smallest_parts for parts in _grow_from(moduli, p, max_size, max_part)]

    cores = [Partition(())] + [Partition(parts) for parts in raw]
    cores.sort(key=sort_key)
    return cores


def enumerate_cores(spec: CoreSpec, budget: Optional[EnumerationBudget] = None, workers: int = 1) -> List[Partition]:
    """
    Every simultaneous core of ``spec`` up to the budget's size.

    Args:
        spec: The moduli
        budget: Size bound; defaults to the Tripathi bound of ``spec``
        workers: Process count, split over the smallest part

    Returns:
        Partitions ordered by size, then reverse-lexicographically

    Raises:
        InfiniteFamilyError: If no budget is given and ``spec`` has no coprime pair
    """
    if budget is None:
        budget = EnumerationBudget.tripathi(spec)
    cores = _enumerate(spec.moduli, budget.max_size, None, workers)
    logger.debug(f"Enumerated {len(cores)} cores for {spec} up to size {budget.max_size} ({budget.justification})")
    return cores


def enumerate_cores_naive(spec: CoreSpec, max_size: int) -> List[Partition]:
    """Filter every partition of size at most ``max_size`` through the hook test."""
    return [p for n in range(max_size + 1) for p in partitions_of(n) if satisfies_spec(p, spec)]


class OracleStats(BaseModel):
    """Aggregates over an enumeration."""
    model_config = ConfigDict(frozen=True)

    count: int
    total_size: int
    max_size_attained: int
    maximizers: List[Partition]
    self_conjugate: List[Partition]
    self_conjugate_max: int
    self_conjugate_maximizers: List[Partition]

    @property
    def mean(self) -> Fraction:
        return Fraction(self.total_size, self.count)


def _maximizers(partitions: List[Partition]) -> Tuple[int, List[Partition]]:
    top = max(p.size for p in partitions)
    return top, [p for p in partitions if p.size == top]


def oracle_stats(spec: CoreSpec, budget: Optional[EnumerationBudget] = None, workers: int = 1) -> OracleStats:
    cores = enumerate_cores(spec, budget, workers=workers)
    top, maximizers = _maximizers(cores)
    selfconj = [p for p in cores if is_self_conjugate(p)]
    sc_top, sc_maximizers = _maximizers(selfconj)
    return OracleStats(
        count=len(cores),
        total_size=sum(p.size for p in cores),
        max_size_attained=top,
        maximizers=maximizers,
        self_conjugate=selfconj,
        self_conjugate_max=sc_top,
        self_conjugate_maximizers=sc_maximizers,
    )


def enumerate_cores_by_largest_part(a: int, x: int, y: Optional[int] = None, i: Optional[int] = None) -> List[Partition]:
    """
    a-cores with largest part exactly ``x``, optionally with second largest part
    ``y`` or with ``x`` repeated exactly ``i`` times.

    The search is finite without a size bound: parts never exceed x and hook
    pruning keeps every multiplicity below a.
    """
    if a < 2:
        raise PreconditionError("a must be at least 2", f"got {a}")
    if x < 0:
        raise PreconditionError("x must be non-negative", f"got {x}")
    cores = _enumerate((a,), None, x, 1) if x > 0 else [Partition(())]
    selected = []
    for p in cores:
        if p.largest != x:
            continue
        if y is not None and (p.length < 2 or p.parts[1] != y):
            continue
        if i is not None and sum(1 for part in p.parts if part == x) != i:
            continue
        selected.append(p)
    return selected


def write_jsonl(partitions: Iterable[Partition], fh: IO[str]) -> None:
    """One compact JSON list per line."""
    for p in partitions:
        fh.write(json.dumps(p.to_list(), separators=(",", ":")) + "\n")


def write_csv(partitions: Iterable[Partition], fh: IO[str]) -> None:
    """Columns size, parts (space separated), self_conjugate."""
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["size", "parts", "self_conjugate"])
    for p in partitions:
        writer.writerow([p.size, " ".join(str(part) for part in p.parts), "true" if is_self_conjugate(p) else "false"])
