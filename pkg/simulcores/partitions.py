"""
Integer partitions, Ferrers-diagram hook lengths and direct core checks.

Everything else in the package is tested against the hook-length definitions
in this module, so nothing here depends on the abacus machinery.
"""

import re
from itertools import combinations
from math import gcd
from typing import Iterator, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, RootModel, field_validator, model_validator

from .errors import NotACellError, PreconditionError


class Partition(RootModel[Tuple[int, ...]]):
    """
    A partition stored as its non-increasing tuple of positive parts.

    Serialises as a JSON list, e.g. ``[9,6,3,1,1,1]``; the empty partition is ``[]``.
    """
    model_config = ConfigDict(frozen=True)

    root: Tuple[int, ...] = ()

    @model_validator(mode="after")
    def _check_parts(self) -> "Partition":
        parts = self.root
        if any(part < 1 for part in parts):
            raise ValueError(f"parts must be positive integers, got {list(parts)}")
        if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
            raise ValueError(f"parts must be non-increasing, got {list(parts)}")
        return self

    @property
    def parts(self) -> Tuple[int, ...]:
        return self.root

    @property
    def size(self) -> int:
        return sum(self.root)

    @property
    def length(self) -> int:
        return len(self.root)

    @property
    def largest(self) -> int:
        return self.root[0] if self.root else 0

    def to_list(self) -> List[int]:
        return list(self.root)

    def __str__(self) -> str:
        return "(" + ",".join(str(part) for part in self.root) + ")"


def sort_key(p: Partition) -> Tuple[int, Tuple[int, ...]]:
    """Order by size, then reverse-lexicographically by parts: (2) before (1,1)."""
    return (p.size, tuple(-part for part in p.parts))


class CoreSpec(BaseModel):
    """
    A set of moduli defining a simultaneous-core constraint.
    """
    model_config = ConfigDict(frozen=True)

    moduli: Tuple[int, ...] = Field(..., description="Deduplicated, sorted moduli, each at least 2")

    @field_validator("moduli")
    @classmethod
    def _normalise(cls, moduli: Tuple[int, ...]) -> Tuple[int, ...]:
        if not moduli:
            raise ValueError("a core spec needs at least one modulus")
        if any(m < 2 for m in moduli):
            raise ValueError(f"every modulus must be at least 2, got {list(moduli)}")
        return tuple(sorted(set(moduli)))

    @classmethod
    def of(cls, *moduli: int) -> "CoreSpec":
        return cls(moduli=tuple(moduli))

    @property
    def has_coprime_pair(self) -> bool:
        return bool(self.coprime_pairs())

    def coprime_pairs(self) -> List[Tuple[int, int]]:
        return [(a, b) for a, b in combinations(self.moduli, 2) if gcd(a, b) == 1]

    def reduced(self) -> "CoreSpec":
        """
        Drop moduli that are non-negative integer combinations of smaller ones.

        An (a,b)-core is automatically an (sa+tb)-core, so the dropped moduli
        never change the set of cores.
        """
        kept: List[int] = []
        for m in self.moduli:
            reachable = [False] * (m + 1)
            reachable[0] = True
            for n in range(1, m + 1):
                reachable[n] = any(n >= k and reachable[n - k] for k in kept)
            if not reachable[m]:
                kept.append(m)
        return CoreSpec(moduli=tuple(kept))

    def __str__(self) -> str:
        return "{" + ",".join(str(m) for m in self.moduli) + "}"


def _column_lengths(parts: Tuple[int, ...]) -> List[int]:
    columns = [0] * (parts[0] if parts else 0)
    for part in parts:
        for col in range(part):
            columns[col] += 1
    return columns


def conjugate(p: Partition) -> Partition:
    """Transpose of the Ferrers diagram."""
    return Partition(tuple(_column_lengths(p.parts)))


def is_self_conjugate(p: Partition) -> bool:
    return tuple(_column_lengths(p.parts)) == p.parts


def hook_length(p: Partition, row: int, col: int) -> int:
    """
    Hook length of the cell in row ``row`` and column ``col`` (both 1-based).

    Args:
        p: The partition
        row: Row index, 1 for the largest part
        col: Column index, 1 for the leftmost column

    Returns:
        arm + leg + 1

    Raises:
        NotACellError: If (row, col) is outside the diagram
    """
    parts = p.parts
    if row < 1 or row > len(parts) or col < 1 or col > parts[row - 1]:
        raise NotACellError(f"not a cell: ({row}, {col}) in {p}")
    arm = parts[row - 1] - col
    leg = sum(1 for part in parts if part >= col) - row
    return arm + leg + 1


def hook_lengths(p: Partition) -> Iterator[int]:
    """Yield every hook length, row by row from the largest part."""
    parts = p.parts
    columns = _column_lengths(parts)
    for row, part in enumerate(parts):
        for col in range(part):
            yield part - col + columns[col] - row - 1


def is_t_core(p: Partition, t: int) -> bool:
    """True iff no hook length of ``p`` is divisible by ``t``; for t = 1 only the empty partition qualifies."""
    if t < 1:
        raise PreconditionError("t must be at least 1", f"got {t}")
    return all(hook % t for hook in hook_lengths(p))


def satisfies_spec(p: Partition, spec: CoreSpec) -> bool:
    """True iff ``p`` is simultaneously a core for every modulus of ``spec``."""
    moduli = spec.moduli
    return all(all(hook % m for m in moduli) for hook in hook_lengths(p))


def partitions_of(n: int) -> Iterator[Partition]:
    """
    Yield every partition of ``n`` in reverse lexicographic order.
    """
    if n < 0:
        return

    def build(remaining: int, cap: int, prefix: List[int]) -> Iterator[Tuple[int, ...]]:
        if remaining == 0:
            yield tuple(prefix)
            return
        for part in range(min(remaining, cap), 0, -1):
            prefix.append(part)
            yield from build(remaining - part, part, prefix)
            prefix.pop()

    for parts in build(n, n, []):
        yield Partition(parts)


_SEPARATORS = re.compile(r"[\s,]+")


def parse_partition(text: str) -> Partition:
    """
    Parse ``"9,6,3,1,1,1"`` or ``"[9, 6, 3, 1, 1, 1]"``; ``""`` and ``"[]"`` give the empty partition.
    """
    body = text.strip().strip("[]()").strip()
    if not body:
        return Partition(())
    try:
        parts = tuple(int(token) for token in _SEPARATORS.split(body) if token)
    except ValueError:
        raise PreconditionError("partition parts must be integers", f"got {text!r}")
    return Partition(parts)
