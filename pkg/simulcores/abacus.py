"""
The tilted a-abacus.

Bead positions are the integers and row ``i`` holds the positions congruent to
``i`` mod a. The line L sits immediately left of position 0. In row ``i`` the
black beads (NE steps) are the positions ``i + a*j`` with ``j >= c_i`` and the
white beads (SE steps) are the rest, so r_i - l_i = c_i. A partition with parts
lambda_1 >= lambda_2 >= ... has black set {k - 1 - lambda_k : k >= 1}, taking
lambda_k = 0 past its length. With this convention (1,2,0,-3) in C_4 is the
4-core (9,6,3,1,1,1).
"""

from fractions import Fraction
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .errors import NotACoreError, PreconditionError
from .partitions import Partition


class CCoords(BaseModel):
    """A point of C_a: an integer vector of length a with zero sum."""
    model_config = ConfigDict(frozen=True)

    a: int = Field(..., ge=2, description="Abacus modulus")
    c: Tuple[int, ...] = Field(..., description="c_0 .. c_{a-1}")

    @model_validator(mode="after")
    def _check(self) -> "CCoords":
        if len(self.c) != self.a:
            raise ValueError(f"c must have length {self.a}, got {len(self.c)}")
        if sum(self.c) != 0:
            raise ValueError(f"c-coordinates must sum to 0, got {list(self.c)}")
        return self


class XCoords(BaseModel):
    """
    A point of X_a, stored exactly as numerators over the fixed denominator 2a.
    """
    model_config = ConfigDict(frozen=True)

    a: int = Field(..., ge=2, description="Abacus modulus")
    num2a: Tuple[int, ...] = Field(..., description="2a * x_i for each i")

    @model_validator(mode="after")
    def _check(self) -> "XCoords":
        a = self.a
        if len(self.num2a) != a:
            raise ValueError(f"x must have length {a}, got {len(self.num2a)}")
        if sum(self.num2a) != 0:
            raise ValueError(f"x-coordinates must sum to 0, got {list(self.num2a)}")
        for i, num in enumerate(self.num2a):
            if (num - (2 * i - (a - 1))) % (2 * a):
                raise ValueError(
                    f"x_{i} = {num}/{2 * a} is not congruent to {i}/{a} - {a - 1}/{2 * a} mod 1"
                )
        return self

    def values(self) -> List[Fraction]:
        return [Fraction(num, 2 * self.a) for num in self.num2a]


def _black_positions(parts: Tuple[int, ...]) -> List[int]:
    """Black beads of the boundary path that lie left of position len(parts)."""
    return [k - part for k, part in enumerate(parts)]


def partition_to_c(p: Partition, a: int) -> CCoords:
    """
    The map phi_a from a-cores to C_a.

    Args:
        p: An a-core
        a: Abacus modulus, at least 2

    Returns:
        The c-coordinates of the tilted abacus whose path encodes ``p``

    Raises:
        NotACoreError: If some row of the abacus is not flush, i.e. ``p`` is not an a-core
    """
    if a < 2:
        raise PreconditionError("a must be at least 2", f"got {a}")
    parts = p.parts
    n = len(parts)

    # every position >= n is black; the finite black beads all sit below n
    first = [n + ((i - n) % a) for i in range(a)]
    counts = [0] * a
    for pos in _black_positions(parts):
        row = pos % a
        counts[row] += 1
        if pos < first[row]:
            first[row] = pos

    for i in range(a):
        expected = (n - 1 - first[i]) // a + 1 if first[i] < n else 0
        if counts[i] != expected:
            raise NotACoreError(f"not an a-core: {p} is not a {a}-core")

    return CCoords(a=a, c=tuple((first[i] - i) // a for i in range(a)))


def c_to_partition(coords: CCoords) -> Partition:
    """
    Read the a-core off the abacus: each black bead left of the rightmost white
    bead contributes a part equal to the number of white beads to its right.
    """
    a = coords.a
    first = [i + a * ci for i, ci in enumerate(coords.c)]
    horizon = max(first)
    blacks = sorted(pos for i in range(a) for pos in range(first[i], horizon, a))
    parts = tuple(part for part in (k - pos for k, pos in enumerate(blacks)) if part > 0)
    return Partition(parts)


def c_to_x(coords: CCoords) -> XCoords:
    """x_i = c_i + i/a - (a-1)/(2a)."""
    a = coords.a
    return XCoords(a=a, num2a=tuple(2 * a * ci + 2 * i - (a - 1) for i, ci in enumerate(coords.c)))


def x_to_c(x: XCoords) -> CCoords:
    a = x.a
    return CCoords(a=a, c=tuple((num - 2 * i + (a - 1)) // (2 * a) for i, num in enumerate(x.num2a)))


def partition_to_x(p: Partition, a: int) -> XCoords:
    """The map psi_a."""
    return c_to_x(partition_to_c(p, a))


def x_to_partition(x: XCoords) -> Partition:
    return c_to_partition(x_to_c(x))


def size_from_c(coords: CCoords) -> int:
    """Size of the a-core with these c-coordinates: sum of a/2 * c_k^2 + k * c_k."""
    a = coords.a
    doubled = sum(a * ck * ck + 2 * k * ck for k, ck in enumerate(coords.c))
    # sum(c_k^2) has the parity of sum(c_k) = 0, so doubled is even
    return doubled // 2


def is_selfconjugate_c(coords: CCoords) -> bool:
    c = coords.c
    return all(c[i] == -c[-1 - i] for i in range(len(c)))


def is_bcore_c(coords: CCoords, b: int) -> bool:
    """
    True iff the a-core with these c-coordinates is also a b-core.

    Row (i + b) mod a is reached from row i by moving ``floor((b+i)/a)`` rows of
    beads along, so the test is c_{(i+b) mod a} - c_i <= floor((b+i)/a).
    """
    if b < 1:
        raise PreconditionError("b must be at least 1", f"got {b}")
    a, c = coords.a, coords.c
    return all(c[(i + b) % a] - c[i] <= (b + i) // a for i in range(a))


def is_bcore_x(x: XCoords, b: int) -> bool:
    """True iff x_{(i+b) mod a} - x_i <= b/a for all i, compared exactly on numerators over 2a."""
    if b < 1:
        raise PreconditionError("b must be at least 1", f"got {b}")
    a, num = x.a, x.num2a
    return all(num[(i + b) % a] - num[i] <= 2 * b for i in range(a))
