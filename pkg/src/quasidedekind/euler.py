"""Euler and Bernoulli polynomials, and their (quasi-)periodic extensions."""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .exact import Number, Polynomial, floor_frac, poly_eval

__all__ = [
    "DEFAULT_TABLE_SIZE",
    "euler_polynomial",
    "euler_table",
    "euler_number",
    "euler_at_zero",
    "bernoulli_polynomial",
    "bernoulli_table",
    "quasi_euler_eval",
    "periodic_bernoulli_eval",
    "sawtooth",
]

DEFAULT_TABLE_SIZE = 16


def _check_index(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"index must be a nonnegative integer, got {n!r}")


@lru_cache(maxsize=None)
def euler_polynomial(n: int) -> Polynomial:
    """E_n(x), from E_n(x+1) + E_n(x) = 2 x^n.

    Expanding E_n(x+1) by Taylor's theorem turns that identity into
    E_n(x) = x^n - 1/2 * sum_{k<n} C(n,k) E_k(x).
    """
    _check_index(n)
    acc = Polynomial()
    for k in range(n):
        acc = acc + euler_polynomial(k) * math.comb(n, k)
    return Polynomial.monomial(n) - acc * Fraction(1, 2)


def euler_table(n: int = DEFAULT_TABLE_SIZE) -> tuple[Polynomial, ...]:
    return tuple(euler_polynomial(k) for k in range(n + 1))


def euler_number(n: int) -> Fraction:
    """The integer 2^n E_n(1/2); zero for odd n."""
    return 2**n * poly_eval(euler_polynomial(n), Fraction(1, 2))


def euler_at_zero(n: int) -> Fraction:
    _check_index(n)
    coeffs = euler_polynomial(n).coeffs
    return coeffs[0] if coeffs else Fraction(0)


@lru_cache(maxsize=None)
def bernoulli_polynomial(n: int) -> Polynomial:
    """B_n(x) in the standard normalization (B_1(0) = -1/2, zero mean for n >= 1).

    Uses sum_{k<=n} C(n+1,k) B_k(x) = (n+1) x^n, i.e. the difference equation
    B_{n+1}(x+1) - B_{n+1}(x) = (n+1) x^n read at the coefficient level.
    """
    _check_index(n)
    acc = Polynomial()
    for k in range(n):
        acc = acc + bernoulli_polynomial(k) * math.comb(n + 1, k)
    return Polynomial.monomial(n) - acc * Fraction(1, n + 1)


def bernoulli_table(n: int = DEFAULT_TABLE_SIZE) -> tuple[Polynomial, ...]:
    return tuple(bernoulli_polynomial(k) for k in range(n + 1))


def quasi_euler_eval(k: int, x: Number) -> Fraction:
    """(-1)^[x] E_k({x}); anti-periodic with period 1."""
    whole, frac = floor_frac(x)
    value = poly_eval(euler_polynomial(k), frac)
    return -value if whole % 2 else value


def sawtooth(x: Number) -> Fraction:
    """((x)): x - [x] - 1/2 off the integers, 0 on them."""
    _, frac = floor_frac(x)
    if frac == 0:
        return Fraction(0)
    return frac - Fraction(1, 2)


def periodic_bernoulli_eval(k: int, x: Number) -> Fraction:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"periodic Bernoulli function needs k >= 1, got {k!r}")
    if k == 1:
        return sawtooth(x)
    return poly_eval(bernoulli_polynomial(k), floor_frac(x).frac)
