"""
Largest simultaneous cores.

Closed forms for the largest (s, s+1, s+2)-core, its self-conjugate variant and
the largest (a, b)-core, together with an explicit construction of the largest
self-conjugate (s, s+1, s+2)-core from its (s+1)-abacus coordinates.
"""

import logging
from math import comb, gcd
from typing import Dict, Iterator, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

from .abacus import CCoords, c_to_partition, size_from_c
from .errors import InvariantViolation, NotCoprimeError, PreconditionError
from .partitions import Partition, is_self_conjugate, is_t_core

logger = logging.getLogger(__name__)


def _require_s(s: int) -> None:
    if s < 1:
        raise PreconditionError("s must be at least 1", f"got {s}")


def largest_size_sss(s: int) -> int:
    """Largest size of an (s, s+1, s+2)-core."""
    _require_s(s)
    m, odd = divmod(s + 1, 2)
    if odd == 0:
        # s = 2m - 1
        return m * comb(m + 1, 3)
    m = s // 2
    return (m + 1) * comb(m + 1, 3) + comb(m + 2, 3)


def largest_size_selfconj_sss(s: int) -> int:
    """Largest size of a self-conjugate (s, s+1, s+2)-core."""
    _require_s(s)
    w, r = divmod(s, 4)
    if r == 0:
        numerator = w * (2 * w + 1) * (4 * w * w + 2 * w + 1)
    else:
        w += 1
        if r == 3:
            numerator = w * w * (8 * w * w - 6 * w + 1)
        elif r == 2:
            numerator = w * (2 * w - 1) * (4 * w * w - 2 * w + 1)
        else:
            numerator = (w - 1) * (2 * w - 1) * (4 * w * w - 5 * w + 3)
    if numerator % 3:
        raise InvariantViolation(f"self-conjugate maximum for s={s} is not an integer")
    return numerator // 3


def selfconj_gap(s: int) -> int:
    """
    Difference between the unrestricted and the self-conjugate maximum for odd s.

    Raises:
        PreconditionError: If s is even; the two maxima coincide there
    """
    _require_s(s)
    if s % 2 == 0:
        raise PreconditionError("s must be odd", f"got {s}")
    w, r = divmod(s + 1, 4)
    if r == 0:
        return (2 * w - 1) * w * w
    w = (s + 3) // 4
    return (2 * w - 1) * (w - 1) ** 2


def largest_size_ab(a: int, b: int) -> int:
    """Largest size of an (a, b)-core: (a^2-1)(b^2-1)/24."""
    if a < 1 or b < 1:
        raise PreconditionError("a and b must be positive", f"a={a}, b={b}")
    if gcd(a, b) != 1:
        raise NotCoprimeError(a, b)
    numerator = (a * a - 1) * (b * b - 1)
    if numerator % 24:
        raise InvariantViolation(f"(a^2-1)(b^2-1) = {numerator} is not divisible by 24 for a={a}, b={b}")
    return numerator // 24


class CConstraintSystem(BaseModel):
    """
    The c-coordinate conditions for an (s+1)-core to also be an s-core and an (s+2)-core.

    Over vectors of length a = s+1 with zero sum:
    |c_{k+1} - c_k| <= 1 for 0 <= k <= s-1, and 0 <= c_0 - c_s <= 2.
    """
    model_config = ConfigDict(frozen=True)

    s: int = Field(..., ge=1, description="Smallest of the three consecutive moduli")

    @property
    def a(self) -> int:
        return self.s + 1

    @property
    def half(self) -> int:
        """Number of free coordinates of an antisymmetric member."""
        return self.a // 2

    def contains(self, c: Sequence[int]) -> bool:
        c = tuple(c)
        if len(c) != self.a or sum(c) != 0:
            return False
        if any(abs(c[k + 1] - c[k]) > 1 for k in range(self.s)):
            return False
        return 0 <= c[0] - c[self.s] <= 2

    def _extend(self, head: Sequence[int]) -> CCoords:
        head = tuple(head)
        middle = (0,) if self.a % 2 else ()
        return CCoords(a=self.a, c=head + middle + tuple(-v for v in reversed(head)))

    def _terminal_ok(self, value: int) -> bool:
        # the last free entry must connect to the mirrored half
        if self.a % 2:
            return abs(value) <= 1
        return value == 0

    def iter_selfconjugate_members(self) -> Iterator[CCoords]:
        """
        Exhaustive depth-first walk over antisymmetric members, in lexicographic
        order of the free half.
        """
        half = self.half
        head: List[int] = []

        def walk() -> Iterator[CCoords]:
            if len(head) == half:
                if self._terminal_ok(head[-1]):
                    yield self._extend(head)
                return
            options = (0, 1) if not head else (head[-1] - 1, head[-1], head[-1] + 1)
            for value in options:
                head.append(value)
                yield from walk()
                head.pop()

        yield from walk()

    def proof_candidates(self) -> Tuple[CCoords, CCoords]:
        """
        The two explicit antisymmetric members that compete for the maximum when s is odd:
        c_k = min(k+1, h-1-k) and c_k = -min(k, h-1-k) on the free half of length h.
        """
        if self.s % 2 == 0:
            raise PreconditionError("s must be odd", f"got {self.s}")
        h = self.half
        rising = [min(k + 1, h - 1 - k) for k in range(h)]
        falling = [-min(k, h - 1 - k) for k in range(h)]
        return self._extend(rising), self._extend(falling)


def _half_objective(a: int, k: int, value: int) -> int:
    """Contribution of the pair (c_k, c_{a-1-k}) = (value, -value) to the size."""
    return a * value * value - (a - 1 - 2 * k) * value


def construct_largest_selfconj_sss(s: int) -> Tuple[Partition, int]:
    """
    Build the largest self-conjugate (s, s+1, s+2)-core.

    A dynamic program over (index, value) on the free half of an antisymmetric
    c-vector keeps, for each reachable value, the best partial size and the
    number of paths attaining it.

    Args:
        s: Smallest modulus, at least 1

    Returns:
        (partition, size)

    Raises:
        InvariantViolation: If the maximum is attained twice, disagrees with the
            closed form, or the result fails the hook-length checks
    """
    _require_s(s)
    system = CConstraintSystem(s=s)
    a, half = system.a, system.half

    # value -> (best partial size, number of optimal paths, one optimal head)
    layer: Dict[int, Tuple[int, int, Tuple[int, ...]]] = {
        v: (_half_objective(a, 0, v), 1, (v,)) for v in (0, 1)
    }
    for k in range(1, half):
        nxt: Dict[int, Tuple[int, int, Tuple[int, ...]]] = {}
        for prev in sorted(layer):
            best, ways, head = layer[prev]
            for v in (prev - 1, prev, prev + 1):
                score = best + _half_objective(a, k, v)
                current = nxt.get(v)
                if current is None or score > current[0]:
                    nxt[v] = (score, ways, head + (v,))
                elif score == current[0]:
                    nxt[v] = (score, current[1] + ways, current[2])
        layer = nxt

    finals = [layer[v] for v in sorted(layer) if system._terminal_ok(v)]
    top = max(score for score, _, _ in finals)
    winners = [(ways, head) for score, ways, head in finals if score == top]
    total_ways = sum(ways for ways, _ in winners)
    if total_ways != 1:
        raise InvariantViolation(f"self-conjugate maximum for s={s} is attained {total_ways} times")

    coords = system._extend(winners[0][1])
    partition = c_to_partition(coords)
    size = size_from_c(coords)
    logger.debug(f"Largest self-conjugate ({s},{s + 1},{s + 2})-core: c={list(coords.c)}, size={size}")

    if size != top or partition.size != size:
        raise InvariantViolation(f"size mismatch for s={s}: objective {top}, abacus {size}, partition {partition.size}")
    expected = largest_size_selfconj_sss(s)
    if size != expected:
        raise InvariantViolation(f"constructed maximum {size} for s={s} differs from the closed form {expected}")
    if not is_self_conjugate(partition):
        raise InvariantViolation(f"constructed maximizer {partition} for s={s} is not self-conjugate")
    if not all(is_t_core(partition, t) for t in (s, s + 1, s + 2)):
        raise InvariantViolation(f"constructed maximizer {partition} is not an ({s},{s + 1},{s + 2})-core")
    return partition, size
