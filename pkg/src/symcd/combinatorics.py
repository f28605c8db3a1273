"""Exact combinatorial primitives.

Everything downstream is built from three ingredients: arbitrary-precision
factorials, binomial coefficients with arbitrary (possibly negative) integer
upper index, and a tiny bivariate polynomial type truncated at total degree 2,
which is all that coefficient extraction of the form [t1*t2] (1 + a*t1 +
b*t2)^n ever needs.

All scalars are ``fractions.Fraction`` (re-exported as ``Rational``); nothing
in this package touches floating point.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction

__all__ = [
    "Rational",
    "as_rational",
    "factorial",
    "inv_factorial",
    "gen_binomial",
    "BivariateSeries",
    "series_multiply",
    "linear_power_coefficient",
]


def as_rational(value: int | Fraction | str) -> Fraction:
    """Coerce ``value`` to an exact rational, rejecting floats outright."""
    if isinstance(value, float):
        raise TypeError(
            "floating-point input would break exactness; pass an int, a "
            "Fraction, or a 'p/q' string"
        )
    return Fraction(value)


def factorial(n: int) -> int:
    """n! for n >= 0."""
    if n < 0:
        raise ValueError(f"factorial is undefined for negative n (got {n})")
    return math.factorial(n)


def inv_factorial(m: int) -> Fraction:
    """1/m! for m >= 0 and exactly 0 for m < 0.

    The zero convention encodes the vanishing of theta^j for j > g: top-degree
    monomial values come out as g! * inv_factorial(g - d + k), which this makes
    correct on C_d even when d > g.
    """
    if m < 0:
        return Fraction(0)
    return Fraction(1, math.factorial(m))


def gen_binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k) for any integer n and k >= 0.

    For negative upper index this is the generalized value
    ``n(n-1)...(n-k+1)/k! = (-1)^k * C(k-n-1, k)``; in particular
    C(-1, k) = (-1)^k, which the subordinate-locus class formula relies on.
    """
    if k < 0:
        raise ValueError(f"lower index must be non-negative (got {k})")
    if n >= 0:
        return math.comb(n, k)
    return (-1) ** k * math.comb(k - n - 1, k)


def linear_power_coefficient(c0: int | Fraction, c1: int | Fraction, n: int, m: int) -> Fraction:
    """Coefficient of t^m in (c0 + c1*t) * (1 + t)^n, for any integer n and m >= 0."""
    if m < 0:
        raise ValueError(f"m must be non-negative (got {m})")
    value = as_rational(c0) * gen_binomial(n, m)
    if m >= 1:
        value += as_rational(c1) * gen_binomial(n, m - 1)
    return value


class BivariateSeries:
    """Polynomial in two formal variables t1, t2 truncated at total degree 2.

    Exponent pairs (i, j) with i + j > 2 are never stored; multiplication drops
    them.  Integer powers of series with unit-like constant term are supported
    for negative exponents as well, via truncated inversion followed by binary
    exponentiation, so that [t1*t2] of expressions such as
    (1 + 2*t1 + 3*t2)^(-2) * (1 + 4*t1 + 9*t2)^4 is exact.

    Instances are immutable; all operations return new series.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: dict[tuple[int, int], int | Fraction] | None = None):
        coeffs: dict[tuple[int, int], Fraction] = {}
        for (i, j), value in (coefficients or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"exponents must be non-negative (got {(i, j)})")
            if i + j > 2:
                raise ValueError(f"exponent pair {(i, j)} exceeds the truncation degree 2")
            value = as_rational(value)
            if value:
                coeffs[(i, j)] = value
        self._coeffs = coeffs

    @classmethod
    def linear(cls, constant: int | Fraction, t1: int | Fraction, t2: int | Fraction) -> "BivariateSeries":
        """The series constant + t1_coeff*t1 + t2_coeff*t2."""
        return cls({(0, 0): constant, (1, 0): t1, (0, 1): t2})

    def coefficient(self, i: int, j: int) -> Fraction:
        return self._coeffs.get((i, j), Fraction(0))

    def items(self):
        return self._coeffs.items()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self) -> str:
        if not self._coeffs:
            return "BivariateSeries(0)"
        terms = []
        for (i, j), value in sorted(self._coeffs.items()):
            parts = [str(value)]
            if i:
                parts.append("t1" if i == 1 else f"t1^{i}")
            if j:
                parts.append("t2" if j == 1 else f"t2^{j}")
            terms.append("*".join(parts))
        return "BivariateSeries(" + " + ".join(terms) + ")"

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        coeffs = dict(self._coeffs)
        for key, value in other._coeffs.items():
            coeffs[key] = coeffs.get(key, Fraction(0)) + value
        return BivariateSeries(coeffs)

    def __mul__(self, other: "BivariateSeries") -> "BivariateSeries":
        coeffs: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), v1 in self._coeffs.items():
            for (i2, j2), v2 in other._coeffs.items():
                i, j = i1 + i2, j1 + j2
                if i + j > 2:
                    continue
                coeffs[(i, j)] = coeffs.get((i, j), Fraction(0)) + v1 * v2
        return BivariateSeries(coeffs)

    def inverse(self) -> "BivariateSeries":
        """Multiplicative inverse modulo total degree 3; constant term must be nonzero."""
        constant = self.coefficient(0, 0)
        if not constant:
            raise ValueError("series with zero constant term has no inverse")
        # Write self = c*(1 + B) with B of positive order; then 1/self = (1 - B + B^2)/c.
        tail = BivariateSeries({key: value / constant for key, value in self._coeffs.items() if key != (0, 0)})
        one = BivariateSeries({(0, 0): 1})
        result = one + BivariateSeries({key: -value for key, value in tail.items()}) + tail * tail
        return BivariateSeries({key: value / constant for key, value in result.items()})

    def __pow__(self, exponent: int) -> "BivariateSeries":
        if not isinstance(exponent, int):
            raise TypeError("series exponent must be an integer")
        base = self
        if exponent < 0:
            base = self.inverse()
            exponent = -exponent
        result = BivariateSeries({(0, 0): 1})
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result


def series_multiply(a: BivariateSeries, b: BivariateSeries) -> BivariateSeries:
    """Truncated product of two degree-<=2 series."""
    return a * b
