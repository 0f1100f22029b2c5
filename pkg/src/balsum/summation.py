"""Closed forms for partial sums of powers of equally spaced balancing numbers.

The backbone is the generating function of the subsequence B(k*m):

    sum_k B(k*m) z**k  =  B(m)*z / (1 - 2*C(m)*z + z**2)

whose partial sums telescope into
(B(m*(n+1)) - B(m*n) - B(m)) / (2*C(m) - 2).  A shifted variant covers
sum_k B(k*m + r), and composing the shifted sums with the linearization of
B(n)**l yields exact closed forms for sum_{0<=k<=n} B(k*m)**l for arbitrary
positive m and l.  Every division in this module is exact by construction and
checked at runtime.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import as_integer, exact_div, rat_from_str, rat_to_str
from .linearize import _join_signed, linearize
from .sequences import balancing, lucas_balancing


@dataclass(frozen=True)
class GFParams:
    """Numerator coefficient and denominator middle coefficient of the
    subsequence generating function B(m)*z / (1 - middle*z + z**2)."""

    numer: int
    middle: int
    m: int


def gf_params(m: int) -> GFParams:
    """Parameters of the generating function of k -> B(k*m), m >= 1."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    return GFParams(balancing(m), 6 * balancing(m) - 2 * balancing(m - 1), m)


def subsequence_gf_check(m: int, n_terms: int) -> bool:
    """Check (1 - middle*z + z**2) * sum_{k<=n_terms} B(k*m) z**k == B(m)*z
    coefficient-wise up to degree n_terms - 1."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if n_terms < 2:
        raise ValueError(f"n_terms must be at least 2, got {n_terms}")
    params = gf_params(m)
    series = [balancing(k * m) for k in range(n_terms)]
    for j in range(n_terms):
        coeff = series[j]
        if j >= 1:
            coeff -= params.middle * series[j - 1]
        if j >= 2:
            coeff += series[j - 2]
        if coeff != (params.numer if j == 1 else 0):
            return False
    return True


def closed_sum(m: int, n: int) -> int:
    """sum_{0<=k<=n} B(k*m) in closed form:
    (B(m*(n+1)) - B(m*n) - B(m)) / (2*C(m) - 2)."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    numer = balancing(m * (n + 1)) - balancing(m * n) - balancing(m)
    return exact_div(numer, 2 * lucas_balancing(m) - 2, f"closed sum m={m}, n={n}")


def shifted_closed_sum(m: int, r: int, n: int) -> int:
    """sum_{0<=k<=n} B(k*m + r) in closed form.

    Same partial-fraction mechanism as :func:`closed_sum`:

        (B(m*(n+1)+r) - B(m*n+r) - B(m+r) + B(r)) / (2*C(m) - 2) + B(r)

    and reduces to it at r = 0 since B(0) = 0.  The formula is pinned to the
    direct-summation oracle over a grid of (m, r, n) in the test suite.
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    b_r = balancing(r)
    numer = balancing(m * (n + 1) + r) - balancing(m * n + r) - balancing(m + r) + b_r
    quot = exact_div(numer, 2 * lucas_balancing(m) - 2, f"shifted sum m={m}, r={r}, n={n}")
    return quot + b_r


def brute_force_power_sum(m: int, l: int, n: int) -> int:
    """sum_{0<=k<=n} B(k*m)**l by direct exponentiation; the independent
    oracle for every closed form in this module."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if l < 1:
        raise ValueError(f"l must be positive, got {l}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return sum(balancing(k * m) ** l for k in range(n + 1))


def power_sum(m: int, l: int, n: int) -> int:
    """sum_{0<=k<=n} B(k*m)**l via linearization plus shifted closed sums.

    Substituting k*m for the argument of the linear form turns each term
    coeff * B(j*(k*m + s)) into coeff * B((j*m)*k + j*s), which is a shifted
    equally spaced sum; the form's constant contributes (n+1) copies.
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    form = linearize(l)
    total = form.constant * (n + 1)
    for (mult, shift), coeff in form.terms:
        total += coeff * shifted_closed_sum(mult * m, mult * shift, n)
    return as_integer(total, f"power sum m={m}, l={l}, n={n}")


@dataclass(frozen=True)
class ClosedSumExpr:
    """Symbolic closed form of sum_{0<=k<=n} B(k*m)**power.

    Evaluates as constant + linear_coeff*(n+1) + sum of
    coeff * B(stride*n + offset) over ``bterms``; the result is an exact
    integer for every n >= 0.
    """

    m: int
    power: int
    bterms: tuple[tuple[Fraction, int, int], ...]  # (coeff, stride, offset)
    linear_coeff: Fraction
    constant: Fraction

    def exact_value_at(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError(f"n must be non-negative, got {n}")
        total = self.constant + self.linear_coeff * (n + 1)
        for coeff, stride, offset in self.bterms:
            total += coeff * balancing(stride * n + offset)
        return total

    def value_at(self, n: int) -> int:
        return as_integer(
            self.exact_value_at(n), f"closed sum formula m={self.m}, power={self.power} at n={n}"
        )

    def render(self) -> str:
        pieces: list[tuple[Fraction, str | None]] = [
            (coeff, _bterm_label(stride, offset)) for coeff, stride, offset in self.bterms
        ]
        if self.linear_coeff:
            pieces.append((self.linear_coeff, "(n+1)"))
        if self.constant:
            pieces.append((self.constant, None))
        return _join_signed(pieces)

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "power": self.power,
            "bterms": [
                {"coeff": rat_to_str(coeff), "stride": stride, "offset": offset}
                for coeff, stride, offset in self.bterms
            ],
            "linear_coeff": rat_to_str(self.linear_coeff),
            "constant": rat_to_str(self.constant),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> ClosedSumExpr:
        bterms = tuple(
            (rat_from_str(t["coeff"]), t["stride"], t["offset"]) for t in data["bterms"]
        )
        return cls(
            data["m"],
            data["power"],
            bterms,
            rat_from_str(data["linear_coeff"]),
            rat_from_str(data["constant"]),
        )


def _bterm_label(stride: int, offset: int) -> str:
    head = "n" if stride == 1 else f"{stride}n"
    return f"B({head})" if offset == 0 else f"B({head}+{offset})"


def power_sum_formula(m: int, l: int) -> ClosedSumExpr:
    """The symbolic closed form behind :func:`power_sum`.

    Each linear-form term coeff * B((j*m)*k + j*s) contributes, with
    M = j*m, R = j*s and D = 2*C(M) - 2, the pair of symbolic terms
    (coeff/D) * B(M*n + M + R) - (coeff/D) * B(M*n + R) plus the constant
    coeff * (B(R) - B(M+R)) / D + coeff * B(R); the linearization constant
    becomes the coefficient of (n+1).
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    form = linearize(l)
    acc: dict[tuple[int, int], Fraction] = {}
    constant = Fraction(0)
    for (mult, shift), coeff in form.terms:
        stride = mult * m
        offset = mult * shift
        denom = 2 * lucas_balancing(stride) - 2
        for key, part in (
            ((stride, stride + offset), coeff / denom),
            ((stride, offset), -coeff / denom),
        ):
            acc[key] = acc.get(key, Fraction(0)) + part
        constant += coeff * Fraction(balancing(offset) - balancing(stride + offset), denom)
        constant += coeff * balancing(offset)
    bterms = tuple(
        (coeff, stride, offset)
        for (stride, offset), coeff in sorted(acc.items(), key=lambda kv: (-kv[0][0], -kv[0][1]))
        if coeff != 0
    )
    return ClosedSumExpr(m, l, bterms, form.constant, constant)
