"""Exact scalars and dense polynomials over the rationals.

Scalars are :class:`fractions.Fraction`, which is always stored reduced with a
positive denominator (zero is ``0/1``).  Polynomials keep ascending
coefficients with trailing zeros stripped.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Union

Rational = Fraction
Number = Union[int, Fraction]

__all__ = [
    "Rational",
    "IntegerPair",
    "Polynomial",
    "floor_frac",
    "binomial",
    "poly_eval",
    "poly_derivative",
    "poly_antiderivative",
    "poly_affine_compose",
    "format_rational",
    "parse_rational",
]


class IntegerPair(NamedTuple):
    whole: int
    frac: Fraction


def floor_frac(x: Number) -> IntegerPair:
    """Split ``x`` into ``([x], {x})`` with the floor taken toward -inf."""
    x = Fraction(x)
    whole = x.numerator // x.denominator
    return IntegerPair(whole, x - whole)


def binomial(n: int, k: int) -> Fraction:
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be nonnegative")
    return Fraction(math.comb(n, k))


def _strip(coeffs: Iterable[Number]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial, ``coeffs[i]`` multiplies ``x**i``."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def constant(cls, c: Number) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, n: int, c: Number = 1) -> "Polynomial":
        return cls((0,) * n + (c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: Number) -> Fraction:
        return poly_eval(self, x)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial(tuple(c + (b[i] if i < len(b) else 0) for i, c in enumerate(a)))

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            return Polynomial(tuple(c * a for a in self.coeffs))
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __repr__(self) -> str:
        if self.is_zero():
            return "Polynomial(0)"
        terms = [f"{format_rational(c)}*x^{i}" for i, c in enumerate(self.coeffs) if c]
        return "Polynomial(" + " + ".join(terms) + ")"


def poly_eval(P: Polynomial, x: Number) -> Fraction:
    """Horner evaluation."""
    acc = Fraction(0)
    for c in reversed(P.coeffs):
        acc = acc * x + c
    return acc


def poly_derivative(P: Polynomial, j: int = 1) -> Polynomial:
    if j < 0:
        raise ValueError("derivative order must be nonnegative")
    coeffs = P.coeffs
    if j == 0:
        return P
    if j > P.degree:
        return Polynomial()
    # falling factorial i*(i-1)*...*(i-j+1) for the x**i term
    return Polynomial(tuple(math.perm(i, j) * coeffs[i] for i in range(j, len(coeffs))))


def poly_antiderivative(P: Polynomial) -> Polynomial:
    """Antiderivative with zero constant term."""
    return Polynomial((0,) + tuple(c / (i + 1) for i, c in enumerate(P.coeffs)))


def poly_affine_compose(P: Polynomial, c: Number, d: Number) -> Polynomial:
    """The polynomial ``x -> P(c*x + d)``."""
    c, d = Fraction(c), Fraction(d)
    n = len(P.coeffs)
    out = [Fraction(0)] * n
    # (c x + d)^i = sum_k C(i,k) c^k d^(i-k) x^k
    for i, a in enumerate(P.coeffs):
        if a == 0:
            continue
        for k in range(i + 1):
            out[k] += a * math.comb(i, k) * c**k * d ** (i - k)
    return Polynomial(tuple(out))


def format_rational(x: Number) -> str:
    """Wire format: ``num/den``, or just ``num`` when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())
