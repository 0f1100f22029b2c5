"""Laurent polynomials over Q(sqrt 2) and mechanical identity verification.

Every identity this library relies on is, after the substitution
X = ALPHA**n (or X = ALPHA**(k*m)), a polynomial identity in X with negative
exponents allowed: BETA being the inverse of ALPHA turns its powers into
negative powers of X.  A :class:`LaurentPoly` is a finitely supported map
from integer exponents to :class:`QuadElem` coefficients, so checking an
identity for all n at once reduces to expanding both sides exactly and
testing for the zero polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .arith import ALPHA, BETA, QUAD_ONE, QUAD_ZERO, QuadElem, RatLike
from .sequences import balancing

# 1 / (4*sqrt(2)) = sqrt(2)/8, the factor converting a power difference
# X**j - X**(-j) into the sequence value it encodes.
_INV_FOUR_SQRT2 = QuadElem(0, Fraction(1, 8))


def _coerce_coeff(value: QuadElem | RatLike) -> QuadElem:
    return value if isinstance(value, QuadElem) else QuadElem(value)


class LaurentPoly:
    """A sparse Laurent polynomial: {exponent: coefficient}, zeros purged.

    Coefficients live in Q(sqrt 2); plain ints and Fractions coerce.  The
    canonical-support invariant makes equality and the zero test trivial.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: dict[int, QuadElem | RatLike] | None = None) -> None:
        cleaned: dict[int, QuadElem] = {}
        if coeffs:
            for exponent, value in coeffs.items():
                coeff = _coerce_coeff(value)
                if coeff:
                    cleaned[exponent] = coeff
        self._coeffs = cleaned

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls()

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({0: QUAD_ONE})

    @classmethod
    def monomial(cls, exponent: int, coeff: QuadElem | RatLike = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._coeffs))

    def coefficient(self, exponent: int) -> QuadElem:
        return self._coeffs.get(exponent, QUAD_ZERO)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        merged = dict(self._coeffs)
        for exponent, coeff in other._coeffs.items():
            merged[exponent] = merged.get(exponent, QUAD_ZERO) + coeff
        return LaurentPoly(merged)

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __mul__(self, other: LaurentPoly | QuadElem | RatLike) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            product: dict[int, QuadElem] = {}
            for e1, c1 in self._coeffs.items():
                for e2, c2 in other._coeffs.items():
                    e = e1 + e2
                    product[e] = product.get(e, QUAD_ZERO) + c1 * c2
            return LaurentPoly(product)
        if isinstance(other, (QuadElem, int, Fraction)):
            scalar = _coerce_coeff(other)
            return LaurentPoly({e: c * scalar for e, c in self._coeffs.items()})
        return NotImplemented

    def __rmul__(self, other: QuadElem | RatLike) -> LaurentPoly:
        return self * other

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("exponent must be non-negative")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(self, x: QuadElem) -> QuadElem:
        """Exact value at X = x; x must be invertible if negative exponents
        are present."""
        inv = x.inverse() if any(e < 0 for e in self._coeffs) else None
        total = QUAD_ZERO
        for exponent, coeff in self._coeffs.items():
            power = x**exponent if exponent >= 0 else inv ** (-exponent)  # type: ignore[operator]
            total = total + coeff * power
        return total

    def __repr__(self) -> str:
        if not self._coeffs:
            return "LaurentPoly(0)"
        terms = " + ".join(f"({self._coeffs[e]})*X^{e}" for e in sorted(self._coeffs, reverse=True))
        return f"LaurentPoly({terms})"


def _power_difference(exponent: int, scale: QuadElem = QUAD_ONE) -> LaurentPoly:
    """scale * (X**exponent - X**(-exponent))."""
    return LaurentPoly({exponent: scale, -exponent: -scale})


def verify_odd_power_identity(l: int) -> bool:
    """Check (X - 1/X)**(2l+1) against its equally-spaced expansion.

    The expansion is sum_{0<=s<=l} (-1)**s * C(2l+1, s) * (X**e - X**-e)
    with e = 2l+1-2s.  With X standing for ALPHA**n this single polynomial
    identity proves the odd-power linearization for every n at once.
    """
    if l < 0:
        raise ValueError(f"l must be non-negative, got {l}")
    lhs = _power_difference(1) ** (2 * l + 1)
    rhs = LaurentPoly.zero()
    for s in range(l + 1):
        e = 2 * l + 1 - 2 * s
        rhs = rhs + _power_difference(e) * ((-1) ** s * comb(2 * l + 1, s))
    return (lhs - rhs).is_zero()


def verify_even_power_identity(l: int) -> bool:
    """Check the even-power linearization of B(n)**(2l) for all n at once.

    With X = ALPHA**n symbolic, B(j*n) encodes as
    (X**j - X**-j) / (4*sqrt 2) and B(j*(n+1)) as
    (ALPHA**j * X**j - BETA**j * X**-j) / (4*sqrt 2); the left-hand side
    B(n)**(2l) is the 2l-th power of the j = 1 encoding.  Both sides are
    scaled by 2**(5l) (so the constant term becomes (-1)**l * C(2l, l),
    confirming that the constant carries the 2**(5l) denominator) and the
    difference must be the zero polynomial.
    """
    if l < 1:
        raise ValueError(f"l must be positive, got {l}")
    lhs = _power_difference(1, _INV_FOUR_SQRT2) ** (2 * l) * (2 ** (5 * l))
    rhs = LaurentPoly.zero()
    for s in range(l):
        j = 2 * (l - s)
        sign = (-1) ** s
        binom = comb(2 * l, s)
        plain = _power_difference(j, _INV_FOUR_SQRT2)
        shifted = LaurentPoly(
            {j: ALPHA**j * _INV_FOUR_SQRT2, -j: -(BETA**j * _INV_FOUR_SQRT2)}
        )
        rhs = rhs + (plain + shifted) * Fraction(2 * sign * binom, balancing(j))
        rhs = rhs + plain * Fraction(-sign * binom * balancing(j), balancing(l - s) ** 2)
    rhs = rhs + LaurentPoly({0: (-1) ** l * comb(2 * l, l)})
    return (lhs - rhs).is_zero()


def verify_subsequence_recurrence(m: int) -> bool:
    """Check B(k*m) = (6*B(m) - 2*B(m-1))*B((k-1)*m) - B((k-2)*m) for all k.

    Written with power differences and K = ALPHA**(k*m) symbolic, every
    BETA power is the conjugate constant times the matching negative power
    of K (ALPHA**(-m) = BETA**m and vice versa), e.g. ALPHA**((k-1)m) is
    K * BETA**m and BETA**((k-1)m) is (1/K) * ALPHA**m.  The m = 1 instance
    is the defining recurrence itself and is excluded here.
    """
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    alpha_m = ALPHA**m
    beta_m = alpha_m.conj()
    alpha_m1 = ALPHA ** (m - 1)
    beta_m1 = alpha_m1.conj()
    spread = ALPHA - BETA

    current = LaurentPoly({1: QUAD_ONE, -1: -QUAD_ONE}) * spread
    back_one = LaurentPoly({1: beta_m, -1: -alpha_m})
    back_two = LaurentPoly({1: beta_m * beta_m, -1: -(alpha_m * alpha_m)})

    expr = (
        current
        - back_one * ((alpha_m - beta_m) * 6)
        + back_one * ((alpha_m1 - beta_m1) * 2)
        + back_two * spread
    )
    return expr.is_zero()
