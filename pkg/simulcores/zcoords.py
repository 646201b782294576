"""
z-coordinates for simultaneous cores, the rotation operator and the orbit lemma.

For coprime (a, b0) the a-cores that are also b0-cores correspond to
non-negative integer vectors z of length a with sum b0 and a | sum(m * z_m).
Extra moduli b_i become upper bounds on cyclic window sums of z.
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .abacus import XCoords
from .errors import InvariantViolation, NotACoreError, NotCoprimeError, PreconditionError

logger = logging.getLogger(__name__)

Weight = Union[int, float, Fraction]


class ZCoords(BaseModel):
    """A z-coordinate vector for the coprime pair (a, b0)."""
    model_config = ConfigDict(frozen=True)

    a: int = Field(..., ge=2, description="Abacus modulus")
    b0: int = Field(..., ge=1, description="Second modulus, coprime to a")
    z: Tuple[int, ...] = Field(..., description="z_0 .. z_{a-1}")

    @model_validator(mode="after")
    def _check(self) -> "ZCoords":
        a, b0, z = self.a, self.b0, self.z
        if gcd(a, b0) != 1:
            raise ValueError(f"gcd({a}, {b0}) must be 1")
        if len(z) != a:
            raise ValueError(f"z must have length {a}, got {len(z)}")
        if any(zm < 0 for zm in z):
            raise ValueError(f"z must be non-negative, got {list(z)}")
        if sum(z) != b0:
            raise ValueError(f"z must sum to {b0}, got {list(z)}")
        if weighted_sum(z) % a:
            raise ValueError(f"{a} must divide sum(m * z_m) for z = {list(z)}")
        return self


class WindowConstraint(BaseModel):
    """
    Cyclic window bound: every run of ``l`` consecutive z_m sums to at most ``bound``.
    """
    model_config = ConfigDict(frozen=True)

    l: int = Field(..., ge=1, description="Window length, between 1 and a-1")
    bound: int = Field(..., ge=0, description="Upper bound on each window sum")
    modulus: Optional[int] = Field(None, description="The modulus b_i this window was derived from")

    @classmethod
    def for_modulus(cls, a: int, b0: int, bi: int) -> "WindowConstraint":
        """
        Derive the window for an extra modulus b_i: l is the unique value in
        [1, a-1] with a | b0*l + b_i, and bound = (b0*l + b_i) / a.
        """
        if gcd(a, b0) != 1:
            raise NotCoprimeError(a, b0)
        if bi % a == 0:
            raise PreconditionError("no extra modulus may be a multiple of a", f"a={a}, b={bi}")
        l = (-bi * pow(b0, -1, a)) % a
        return cls(l=l, bound=(b0 * l + bi) // a, modulus=bi)


def weighted_sum(z: Sequence[int]) -> int:
    return sum(m * zm for m, zm in enumerate(z))


def start_index(a: int, b0: int) -> int:
    """k with k = -(b0+1)/2 mod a; when b0+1 is odd, a is odd and 2 is inverted mod a."""
    if (b0 + 1) % 2 == 0:
        return (-((b0 + 1) // 2)) % a
    if a % 2 == 0:
        raise NotCoprimeError(a, b0)
    return (-(b0 + 1) * pow(2, -1, a)) % a


def x_to_z(x: XCoords, b0: int) -> ZCoords:
    """
    z_m = x_{m*b0+k} - x_{(m+1)*b0+k} + b0/a, indices mod a.

    Raises:
        NotCoprimeError: If gcd(a, b0) != 1
        NotACoreError: If some z_m is negative, i.e. x is not a b0-core
    """
    a = x.a
    if gcd(a, b0) != 1:
        raise NotCoprimeError(a, b0)
    k = start_index(a, b0)
    num = x.num2a
    z = []
    for m in range(a):
        j = (m * b0 + k) % a
        diff = num[j] - num[(j + b0) % a] + 2 * b0
        if diff % (2 * a):
            raise InvariantViolation(f"z_{m} is not an integer for x = {list(num)} / {2 * a}")
        if diff < 0:
            raise NotACoreError(f"x-coordinates {list(num)} / {2 * a} are not a {b0}-core")
        z.append(diff // (2 * a))
    return ZCoords(a=a, b0=b0, z=tuple(z))


def z_to_x(coords: ZCoords) -> XCoords:
    """
    Inverse of x_to_z. The weighted sum fixes x_k through sum(m * z_m) = -a*x_k + b0(a-1)/2,
    and x_{j+b0} = x_j - z_m + b0/a walks the remaining coordinates.
    """
    a, b0, z = coords.a, coords.b0, coords.z
    k = start_index(a, b0)
    num = [0] * a
    j = k
    num[j] = b0 * (a - 1) - 2 * weighted_sum(z)
    for m in range(a - 1):
        nxt = (j + b0) % a
        num[nxt] = num[j] - 2 * a * z[m] + 2 * b0
        j = nxt
    return XCoords(a=a, num2a=tuple(num))


def rotate(z: Sequence[int]) -> Tuple[int, ...]:
    """T(z_0, z_1, ..., z_{a-1}) = (z_1, ..., z_{a-1}, z_0)."""
    z = tuple(z)
    return z[1:] + z[:1]


def compositions(total: int, length: int) -> Iterator[Tuple[int, ...]]:
    """
    Yield every vector of ``length`` non-negative integers summing to ``total``,
    in lexicographic order.
    """
    if length == 0:
        if total == 0:
            yield ()
        return
    if length == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in compositions(total - head, length - 1):
            yield (head,) + tail


def _always(_z: Tuple[int, ...]) -> bool:
    return True


def _rotation_classes(a: int, b0: int, predicate: Callable[[Tuple[int, ...]], bool]) -> Tuple[List[Tuple[int, ...]], List[Tuple[int, ...]]]:
    if gcd(a, b0) != 1:
        raise NotCoprimeError(a, b0)
    y1, y2 = [], []
    for z in compositions(b0, a):
        member = bool(predicate(z))
        if member != bool(predicate(rotate(z))):
            raise PreconditionError("predicate must be stable under rotation", f"fails at {list(z)}")
        if member:
            y2.append(z)
            if weighted_sum(z) % a == 0:
                y1.append(z)
    return y1, y2


def orbit_count_check(a: int, b0: int, predicate: Optional[Callable[[Tuple[int, ...]], bool]] = None) -> Tuple[int, int]:
    """
    Count Y1 (with the divisibility condition) and Y2 (without) and assert a*|Y1| = |Y2|.

    Args:
        a: Length of the vectors
        b0: Required sum, coprime to a
        predicate: Rotation-stable membership test; defaults to accepting everything

    Returns:
        (|Y1|, |Y2|)
    """
    y1, y2 = _rotation_classes(a, b0, predicate or _always)
    if a * len(y1) != len(y2):
        raise InvariantViolation(f"orbit lemma fails for a={a}, b0={b0}: {len(y1)} * {a} != {len(y2)}")
    return len(y1), len(y2)


def weighted_orbit_check(
    a: int,
    b0: int,
    predicate: Optional[Callable[[Tuple[int, ...]], bool]],
    weight: Callable[[Tuple[int, ...]], Weight],
) -> Tuple[Weight, Weight]:
    """
    Weighted orbit lemma: for a rotation-invariant weight, the Y1 total is the Y2 total over a.

    Returns:
        (sum of weight over Y1, sum of weight over Y2)
    """
    y1, y2 = _rotation_classes(a, b0, predicate or _always)
    for z in y2:
        if weight(rotate(z)) != weight(z):
            raise PreconditionError("weight must be invariant under rotation", f"fails at {list(z)}")
    total1 = sum((weight(z) for z in y1), 0)
    total2 = sum((weight(z) for z in y2), 0)
    if isinstance(total1, float) or isinstance(total2, float):
        holds = math.isclose(total1 * a, total2, rel_tol=1e-9, abs_tol=1e-9)
    else:
        holds = total1 * a == total2
    if not holds:
        raise InvariantViolation(f"weighted orbit lemma fails for a={a}, b0={b0}: {total1} * {a} != {total2}")
    return total1, total2


def _window_search(
    a: int,
    b0: int,
    windows: Tuple[Tuple[int, int], ...],
    divisible: bool,
    heads: Iterable[int],
) -> List[Tuple[int, ...]]:
    """Depth-first search over z_0..z_{a-1}, restricted to the given values of z_0."""
    found: List[Tuple[int, ...]] = []
    z = [0] * a

    def prefix_ok(pos: int) -> bool:
        for l, bound in windows:
            start = pos - l + 1
            if start >= 0 and sum(z[start:pos + 1]) > bound:
                return False
        return True

    def wrapping_ok() -> bool:
        for l, bound in windows:
            for j in range(a - l + 1, a):
                if sum(z[j:]) + sum(z[:l - (a - j)]) > bound:
                    return False
        return True

    def place(pos: int, remaining: int) -> None:
        if pos == a - 1:
            z[pos] = remaining
            if prefix_ok(pos) and wrapping_ok() and (not divisible or weighted_sum(z) % a == 0):
                found.append(tuple(z))
            return
        for value in range(remaining + 1):
            z[pos] = value
            if prefix_ok(pos):
                place(pos + 1, remaining - value)
        z[pos] = 0

    for head in heads:
        if head > b0:
            continue
        z[0] = head
        if prefix_ok(0):
            place(1, b0 - head)
    return found


def _run_search(a: int, b0: int, constraints: Sequence[WindowConstraint], divisible: bool, workers: int) -> List[Tuple[int, ...]]:
    if a < 2:
        raise PreconditionError("a must be at least 2", f"got {a}")
    if gcd(a, b0) != 1:
        raise NotCoprimeError(a, b0)
    for constraint in constraints:
        if constraint.l > a - 1:
            raise PreconditionError("window length must be at most a-1", f"l={constraint.l}, a={a}")
    windows = tuple((c.l, c.bound) for c in constraints)
    logger.debug(f"Searching z-coordinates for a={a}, b0={b0}, windows={windows}, workers={workers}")

    if workers <= 1:
        return _window_search(a, b0, windows, divisible, range(b0 + 1))

    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_window_search, a, b0, windows, divisible, (head,)) for head in range(b0 + 1)]
        # heads are submitted in increasing order, so concatenation stays lexicographic
        return [z for future in futures for z in future.result()]


def solution_set(a: int, b0: int, constraints: Sequence[WindowConstraint] = (), workers: int = 1) -> List[ZCoords]:
    """
    All z with sum b0, a | sum(m * z_m) and every cyclic window within its bound.

    Args:
        a: Abacus modulus
        b0: Modulus coprime to a
        constraints: Window constraints derived from the extra moduli
        workers: Process count; the search is split over the value of z_0

    Returns:
        Matching ZCoords in lexicographic order of z
    """
    vectors = _run_search(a, b0, constraints, True, workers)
    return [ZCoords(a=a, b0=b0, z=z) for z in vectors]


def count_window_solutions(a: int, b0: int, constraints: Sequence[WindowConstraint] = (), workers: int = 1) -> int:
    """Number of z with sum b0 and every window within bound, without the divisibility condition."""
    return len(_run_search(a, b0, constraints, False, workers))
