"""Rewrite a power B(n)**l as a rational combination of balancing numbers.

Odd powers B(n)**(2l+1) expand into terms B((2(l-s)+1)*n) with binomial
coefficients over 2**(5l).  Even powers B(n)**(2l) additionally need terms at
the shifted argument n+1 and a constant, so the combination is kept as a map
from a key (multiplier j, shift s in {0, 1}) to the coefficient of
B(j*(n+s)), plus a standalone constant.  Every form built here evaluates to
an exact integer, namely the power it represents, at every n >= 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable

from .arith import as_integer, rat_from_str, rat_to_str
from .sequences import balancing

# (index multiplier j, index shift s): the term's argument is j*(n+s).
TermKey = tuple[int, int]


@dataclass(frozen=True)
class LinearForm:
    """constant + sum of coeff * B(j*(n+s)), representing B(n)**power.

    ``terms`` is sorted by multiplier descending, shift ascending, holds no
    zero coefficients, and has unique keys, so equal forms compare equal.
    """

    power: int
    constant: Fraction
    terms: tuple[tuple[TermKey, Fraction], ...]

    def exact_value_at(self, n: int) -> Fraction:
        """Evaluate at n without the integrality check."""
        if n < 0:
            raise ValueError(f"index must be non-negative, got {n}")
        total = self.constant
        for (mult, shift), coeff in self.terms:
            total += coeff * balancing(mult * (n + shift))
        return total

    def value_at(self, n: int) -> int:
        """Evaluate at n; the result must be the integer B(n)**power."""
        return as_integer(self.exact_value_at(n), f"linear form for power {self.power} at n={n}")

    def render(self) -> str:
        pieces = [(coeff, _term_label(mult, shift)) for (mult, shift), coeff in self.terms]
        if self.constant:
            pieces.append((self.constant, None))
        return _join_signed(pieces)

    def to_json_dict(self) -> dict:
        return {
            "power": self.power,
            "constant": rat_to_str(self.constant),
            "terms": [
                {"multiplier": mult, "shift": shift, "coeff": rat_to_str(coeff)}
                for (mult, shift), coeff in self.terms
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> LinearForm:
        pairs = [
            ((t["multiplier"], t["shift"]), rat_from_str(t["coeff"])) for t in data["terms"]
        ]
        return _build_form(data["power"], rat_from_str(data["constant"]), pairs)


def _term_label(mult: int, shift: int) -> str:
    arg = ("n" if mult == 1 else f"{mult}n") if shift == 0 else (
        "n+1" if mult == 1 else f"{mult}(n+1)"
    )
    return f"B({arg})"


def _join_signed(pieces: list[tuple[Fraction, str | None]]) -> str:
    """Render (coefficient, body) pairs as 'a*x + b*y - c'; unit coefficients
    drop the numeric factor."""
    if not pieces:
        return "0"
    out = []
    for i, (coeff, body) in enumerate(pieces):
        mag = abs(coeff)
        if body is None:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"({mag})*{body}"
        if i == 0:
            out.append(f"-{text}" if coeff < 0 else text)
        else:
            out.append(f"- {text}" if coeff < 0 else f"+ {text}")
    return " ".join(out)


def _build_form(power: int, constant: Fraction, pairs: Iterable[tuple[TermKey, Fraction]]) -> LinearForm:
    merged: dict[TermKey, Fraction] = {}
    for key, coeff in pairs:
        merged[key] = merged.get(key, Fraction(0)) + coeff
    ordered = tuple(
        (key, coeff)
        for key, coeff in sorted(merged.items(), key=lambda kv: (-kv[0][0], kv[0][1]))
        if coeff != 0
    )
    return LinearForm(power, constant, ordered)


def linearize_odd(l: int) -> LinearForm:
    """The form for B(n)**(2l+1).

    Terms are B((2(l-s)+1)*n) with coefficient (-1)**s * C(2l+1, s) / 2**(5l)
    for 0 <= s <= l; there is no shifted term and no constant.
    """
    if l < 0:
        raise ValueError(f"l must be non-negative, got {l}")
    denom = 2 ** (5 * l)
    pairs = [
        ((2 * (l - s) + 1, 0), Fraction((-1) ** s * comb(2 * l + 1, s), denom))
        for s in range(l + 1)
    ]
    return _build_form(2 * l + 1, Fraction(0), pairs)


def linearize_even(l: int) -> LinearForm:
    """The form for B(n)**(2l), l >= 1.

    For each 0 <= s < l, writing j = 2(l-s), the keys (j, 0) and (j, 1) both
    receive 2*(-1)**s * C(2l, s) / (2**(5l) * B(j)), and (j, 0) additionally
    receives -(-1)**s * C(2l, s) * B(j) / (2**(5l) * B(l-s)**2).  The constant
    is (-1)**l * C(2l, l) / 2**(5l); the 2**(5l) denominator on the constant
    is required for the form to reproduce B(n)**(2l) (checked against the
    brute-force oracle in the test suite).
    """
    if l < 1:
        raise ValueError(f"l must be positive, got {l}")
    denom = 2 ** (5 * l)
    pairs: list[tuple[TermKey, Fraction]] = []
    for s in range(l):
        j = 2 * (l - s)
        sign = (-1) ** s
        binom = comb(2 * l, s)
        both = Fraction(2 * sign * binom, denom * balancing(j))
        pairs.append(((j, 0), both))
        pairs.append(((j, 1), both))
        pairs.append(((j, 0), Fraction(-sign * binom * balancing(j), denom * balancing(l - s) ** 2)))
    constant = Fraction((-1) ** l * comb(2 * l, l), denom)
    return _build_form(2 * l, constant, pairs)


def linearize(power: int) -> LinearForm:
    """The form for B(n)**power, power >= 1, dispatching on parity."""
    if power < 1:
        raise ValueError(f"power must be positive, got {power}")
    if power % 2:
        return linearize_odd((power - 1) // 2)
    return linearize_even(power // 2)
