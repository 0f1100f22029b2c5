"""Balancing numbers B(n) and their companions C(n), by independent routes.

B(n) satisfies B(n) = 6*B(n-1) - B(n-2) with B(0) = 0, B(1) = 1 (OEIS
A001109): 0, 1, 6, 35, 204, 1189, ...  The companion sequence C(n) obeys the
same recurrence with C(0) = 1, C(1) = 3 and equals (3*B(n) - B(n-1)) for
n >= 1; it shows up as half the middle coefficient of every equally-spaced
subsequence recurrence, and it satisfies the Pell relation
C(n)**2 - 8*B(n)**2 = 1.

Three generators for B are provided on purpose: the O(n) recurrence, an
O(log n) 2x2 matrix power, and evaluation through powers of
ALPHA = 3 + 2*sqrt(2).  They are implemented independently so each can serve
as an oracle for the others.
"""

from __future__ import annotations

from functools import lru_cache

from .arith import ALPHA, InexactResultError

Mat2 = tuple[tuple[int, int], tuple[int, int]]

_STEP: Mat2 = ((6, -1), (1, 0))
_IDENTITY: Mat2 = ((1, 0), (0, 1))


def _check_index(n: int) -> None:
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")


def _recurrence(n: int, seed0: int, seed1: int) -> int:
    prev, cur = seed0, seed1
    for _ in range(n):
        prev, cur = cur, 6 * cur - prev
    return prev


@lru_cache(maxsize=None)
def balancing(n: int) -> int:
    """B(n) by the iterative recurrence; O(n) big-integer operations."""
    _check_index(n)
    return _recurrence(n, 0, 1)


@lru_cache(maxsize=None)
def lucas_balancing(n: int) -> int:
    """C(n), the companion sequence: 1, 3, 17, 99, ..."""
    _check_index(n)
    return _recurrence(n, 1, 3)


def _mat_mul(x: Mat2, y: Mat2) -> Mat2:
    return (
        (x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]),
        (x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]),
    )


def _mat_pow(n: int) -> Mat2:
    result = _IDENTITY
    base = _STEP
    while n:
        if n & 1:
            result = _mat_mul(result, base)
        base = _mat_mul(base, base)
        n >>= 1
    return result


def balancing_fast(n: int) -> int:
    """B(n) via the n-th power of the step matrix [[6, -1], [1, 0]]; O(log n)."""
    _check_index(n)
    return _mat_pow(n)[1][0]


def lucas_balancing_fast(n: int) -> int:
    """C(n) via the same matrix power, seeded with C(1) = 3, C(0) = 1."""
    _check_index(n)
    m = _mat_pow(n)
    return 3 * m[1][0] + m[1][1]


def balancing_binet(n: int) -> int:
    """B(n) read off ALPHA**n.

    ALPHA**n = a + b*sqrt(2) with b = 2*B(n), because the conjugate power
    BETA**n contributes -b*sqrt(2) and the difference of the two powers is
    4*sqrt(2)*B(n).
    """
    _check_index(n)
    b = (ALPHA**n).b
    if b.denominator != 1 or b.numerator % 2:
        raise InexactResultError(f"sqrt(2) part of ALPHA**{n} is not an even integer: {b}")
    return b.numerator // 2


def lucas_balancing_binet(n: int) -> int:
    """C(n) as the rational part of ALPHA**n."""
    _check_index(n)
    a = (ALPHA**n).a
    if a.denominator != 1:
        raise InexactResultError(f"rational part of ALPHA**{n} is not an integer: {a}")
    return a.numerator


def gf_coefficients(count: int) -> list[int]:
    """First ``count`` power-series coefficients of z / (1 - 6*z + z**2).

    Computed by the coefficient recurrence c(n) = 6*c(n-1) - c(n-2) with
    c(0) = 0, c(1) = 1, independently of :func:`balancing`.
    """
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    coeffs = [0, 1]
    while len(coeffs) < count:
        coeffs.append(6 * coeffs[-1] - coeffs[-2])
    return coeffs[:count]


def sequence_table(upto: int, seq: str = "B") -> list[int]:
    """Values of B or C at indices 0..upto, built in one recurrence pass."""
    _check_index(upto)
    if seq == "B":
        prev, cur = 0, 1
    elif seq == "C":
        prev, cur = 1, 3
    else:
        raise ValueError(f"seq must be 'B' or 'C', got {seq!r}")
    values = []
    for _ in range(upto + 1):
        values.append(prev)
        prev, cur = cur, 6 * cur - prev
    return values
