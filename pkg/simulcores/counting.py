"""
Closed-form counts of core partitions.

Every function here returns an exact integer (or a Fraction for the average
size). Divisions that the theory guarantees to be exact are checked, and a
non-zero remainder raises InvariantViolation.
"""

import logging
from fractions import Fraction
from math import comb, gcd
from typing import Iterator, List, Sequence, Tuple

from .errors import InvariantViolation, NotCoprimeError, PreconditionError
from .partitions import CoreSpec
from .zcoords import WindowConstraint, count_window_solutions, solution_set

logger = logging.getLogger(__name__)


def binom(n: int, k: int) -> int:
    """C(n, k), taken to be 0 whenever n < 0, k < 0 or k > n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def _exact_div(numerator: int, denominator: int, what: str) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise InvariantViolation(f"{what}: {numerator} is not divisible by {denominator}")
    return quotient


def _require_coprime(a: int, b: int) -> None:
    if gcd(a, b) != 1:
        raise NotCoprimeError(a, b)


def count_lower_bounded_solutions(b: int, s: Sequence[int]) -> int:
    """
    Number of non-negative integer vectors z of length len(s) with sum b and z_i >= s_i.

    Args:
        b: Required sum
        s: Lower bounds, one per coordinate

    Returns:
        C(b + a - sum(s) - 1, a - 1) with a = len(s)
    """
    a = len(s)
    if a == 0:
        return 1 if b == 0 else 0
    return binom(b + a - sum(s) - 1, a - 1)


def cat(a: int, b: int) -> int:
    """The rational Catalan number C(a+b, a) / (a+b), the number of (a, b)-cores."""
    if a < 1 or b < 1:
        raise PreconditionError("a and b must be positive", f"a={a}, b={b}")
    _require_coprime(a, b)
    return _exact_div(binom(a + b, a), a + b, f"cat({a}, {b})")


def count_largest_exact(a: int, x: int, i: int) -> int:
    """a-cores with largest part x appearing exactly i times: C(x+a-2-i, a-1-i)."""
    if a < 2:
        raise PreconditionError("a must be at least 2", f"got {a}")
    if x < 1:
        raise PreconditionError("x must be at least 1", f"got {x}")
    if i < 1:
        raise PreconditionError("i must be at least 1", f"got {i}")
    return binom(x + a - 2 - i, a - 1 - i)


def count_largest(a: int, x: int) -> int:
    """a-cores with largest part x: C(x+a-2, x). For x = 0 this counts the empty partition."""
    if a < 2:
        raise PreconditionError("a must be at least 2", f"got {a}")
    if x < 0:
        raise PreconditionError("x must be non-negative", f"got {x}")
    return binom(x + a - 2, x)


def count_largest_second(a: int, x: int, y: int) -> int:
    """
    a-cores with largest part x and second largest part y.

    Only partitions with at least two parts are counted, so y must lie in [1, x].
    """
    if a < 2:
        raise PreconditionError("a must be at least 2", f"got {a}")
    if x < 1:
        raise PreconditionError("x must be at least 1", f"got {x}")
    if y < 1 or y > x:
        raise PreconditionError("y must satisfy 1 <= y <= x", f"x={x}, y={y}")
    gap = x - y
    if gap < a - 1:
        return binom(y + a - 3, y)
    if gap == a - 1:
        return binom(y + a - 2, y)
    return 0


def count_via_lattice(a: int, b0: int, rest: Sequence[int] = (), workers: int = 1) -> int:
    """
    Count (a, b0, b_1, ..., b_n)-cores as lattice points in z-coordinates.

    The direct count of the divisible solution set is compared with the
    unconstrained window count divided by a, and a mismatch is an invariant
    violation.

    Args:
        a: Abacus modulus
        b0: A modulus coprime to a
        rest: Further moduli, none of them a multiple of a
        workers: Process count for the lattice search

    Returns:
        The number of simultaneous cores

    Raises:
        NotCoprimeError: If gcd(a, b0) != 1
        PreconditionError: If some extra modulus is a multiple of a
    """
    _require_coprime(a, b0)
    constraints = [WindowConstraint.for_modulus(a, b0, bi) for bi in rest]
    direct = len(solution_set(a, b0, constraints, workers=workers))
    unconstrained = count_window_solutions(a, b0, constraints, workers=workers)
    if unconstrained != a * direct:
        raise InvariantViolation(
            f"lattice count mismatch for a={a}, b0={b0}, rest={list(rest)}: {direct} * {a} != {unconstrained}"
        )
    logger.debug(f"Lattice count for a={a}, b0={b0}, rest={list(rest)}: {direct}")
    return direct


def _value_multiplicities(total: int, largest: int) -> Iterator[Tuple[int, ...]]:
    """Yield (y_largest, ..., y_1) with sum(i * y_i) = total."""
    if largest == 0:
        if total == 0:
            yield ()
        return
    for y in range(total // largest, -1, -1):
        for tail in _value_multiplicities(total - largest * y, largest - 1):
            yield (y,) + tail


def count_single_window(a: int, b0: int, b1: int) -> int:
    """
    Count (a, b0, b1)-cores when a divides b0 + b1.

    Every z-coordinate is then bounded by m = (b0 + b1) / a, so the lattice
    points are counted by how many coordinates take each value 1..m.
    """
    _require_coprime(a, b0)
    if (b0 + b1) % a:
        raise PreconditionError("a must divide b0+b1", f"a={a}, b0={b0}, b1={b1}")
    m = (b0 + b1) // a
    total = 0
    for ys in _value_multiplicities(b0, m):
        free = a
        term = 1
        for y in ys:
            term *= binom(free, y)
            free -= y
        total += term
    return _exact_div(total, a, f"count_single_window({a}, {b0}, {b1})")


def _require_ssd(s: int, d: int) -> None:
    if s < 1 or d < 1:
        raise PreconditionError("s and d must be positive", f"s={s}, d={d}")
    _require_coprime(s, d)


def count_ssd(s: int, d: int) -> int:
    """Number of (s, s+d, s+2d)-cores."""
    _require_ssd(s, d)
    n = s + d
    total = sum(binom(n, y2) * binom(n - y2, s - 2 * y2) for y2 in range(s // 2 + 1))
    return _exact_div(total, n, f"count_ssd({s}, {d})")


def count_ssd3(s: int, d: int) -> int:
    """Number of (s, s+d, s+2d, s+3d)-cores."""
    _require_ssd(s, d)
    n = s + d
    total = sum(
        (binom(n - k - 1, k - 1) + binom(n - k, k)) * binom(n - k, s - 2 * k)
        for k in range(s // 2 + 1)
    )
    return _exact_div(total, n, f"count_ssd3({s}, {d})")


def count_abc(a: int, b: int, c: int) -> int:
    """
    Number of (a, b, c)-cores when a | 2b + c and c is large enough.

    Raises:
        PreconditionError: One per violated condition, named in ``condition``
        NotCoprimeError: If gcd(a, b) != 1
    """
    if a <= 3:
        raise PreconditionError("a must be greater than 3", f"a={a}")
    if b <= a:
        raise PreconditionError("b must be greater than a", f"a={a}, b={b}")
    _require_coprime(a, b)
    if (2 * b + c) % a:
        raise PreconditionError("a must divide 2b+c", f"a={a}, b={b}, c={c}")
    # c > ab/2 - 2b, kept in integers
    if 2 * c <= a * b - 4 * b:
        raise PreconditionError("c must exceed ab/2-2b", f"a={a}, b={b}, c={c}")
    m = (2 * b + c) // a
    return cat(a, b) - (m + 1) * binom(b + a - m - 3, a - 2) + binom(b + a - m - 3, a - 1)


def average_size_formula(a: int, b: int) -> Fraction:
    """Mean size of an (a, b)-core: (a+b+1)(a-1)(b-1)/24."""
    if a < 1 or b < 1:
        raise PreconditionError("a and b must be positive", f"a={a}, b={b}")
    _require_coprime(a, b)
    return Fraction((a + b + 1) * (a - 1) * (b - 1), 24)


def lattice_parameters(spec: CoreSpec) -> Tuple[int, int, List[int]]:
    """
    Pick (a, b0, rest) for the lattice count: the first coprime pair of the
    reduced spec, with every other kept modulus as an extra constraint.
    """
    reduced = spec.reduced()
    pairs = reduced.coprime_pairs()
    if not pairs:
        raise PreconditionError("the moduli must include a coprime pair", f"moduli={list(spec.moduli)}")
    a, b0 = pairs[0]
    rest = [m for m in reduced.moduli if m not in (a, b0)]
    return a, b0, rest


def count_cores_by_lattice(spec: CoreSpec, workers: int = 1) -> int:
    """Count the simultaneous cores of any spec that contains a coprime pair."""
    a, b0, rest = lattice_parameters(spec)
    logger.debug(f"Counting {spec} via a={a}, b0={b0}, rest={rest}")
    return count_via_lattice(a, b0, rest, workers=workers)
