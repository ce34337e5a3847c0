"""Exact piecewise-polynomial integration of quasi-periodic Euler functions.

On each interval where ``c*x + d`` has constant integer part ``w``,
``Ebar_k(c*x + d) = (-1)^w E_k(c*x + d - w)`` is an honest polynomial, so every
integral here is a finite sum of antiderivative differences.
"""
from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from fractions import Fraction

from .euler import euler_at_zero, euler_polynomial, quasi_euler_eval
from .exact import (
    Number,
    Polynomial,
    binomial,
    floor_frac,
    poly_affine_compose,
    poly_antiderivative,
    poly_derivative,
    poly_eval,
)
from .sums import PreconditionError, require_odd_coprime

__all__ = [
    "PiecewisePolynomial",
    "FourierApproximation",
    "quasi_euler_affine",
    "quasi_euler_piecewise",
    "integrate_quasi_product",
    "integral_lemma_value",
    "sign_integral",
    "x_weighted_integral",
    "boole_sum_check",
    "fourier_partial",
    "fourier_approximation",
]


@dataclass(frozen=True)
class PiecewisePolynomial:
    """``pieces[i]`` is valid on the open interval ``(breakpoints[i], breakpoints[i+1])``."""

    breakpoints: tuple[Fraction, ...]
    pieces: tuple[Polynomial, ...]

    def __post_init__(self):
        bps = tuple(Fraction(b) for b in self.breakpoints)
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "pieces", tuple(self.pieces))
        if len(bps) < 2:
            raise ValueError("need at least two breakpoints")
        if any(lo >= hi for lo, hi in zip(bps, bps[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        if len(self.pieces) != len(bps) - 1:
            raise ValueError("need exactly one piece per interval")

    @property
    def lo(self) -> Fraction:
        return self.breakpoints[0]

    @property
    def hi(self) -> Fraction:
        return self.breakpoints[-1]

    def piece_index(self, x: Number) -> int:
        if not self.lo <= x <= self.hi:
            raise ValueError(f"{x} outside [{self.lo}, {self.hi}]")
        # a breakpoint belongs to the piece on its right; hi to the last piece
        return min(bisect.bisect_right(self.breakpoints, x) - 1, len(self.pieces) - 1)

    def __call__(self, x: Number) -> Fraction:
        return poly_eval(self.pieces[self.piece_index(x)], x)

    def __mul__(self, other) -> "PiecewisePolynomial":
        if isinstance(other, PiecewisePolynomial):
            if (self.lo, self.hi) != (other.lo, other.hi):
                raise ValueError("piecewise factors must share a domain")
            bps = tuple(sorted(set(self.breakpoints) | set(other.breakpoints)))
            pieces = []
            for lo, hi in zip(bps, bps[1:]):
                mid = (lo + hi) / 2
                pieces.append(self.pieces[self.piece_index(mid)] * other.pieces[other.piece_index(mid)])
            return PiecewisePolynomial(bps, tuple(pieces))
        return PiecewisePolynomial(self.breakpoints, tuple(p * other for p in self.pieces))

    __rmul__ = __mul__

    def integrate(self) -> Fraction:
        total = Fraction(0)
        for (lo, hi), piece in zip(zip(self.breakpoints, self.breakpoints[1:]), self.pieces):
            F = poly_antiderivative(piece)
            total += poly_eval(F, hi) - poly_eval(F, lo)
        return total


def quasi_euler_affine(k: int, c: Number, d: Number, lo: Number, hi: Number) -> PiecewisePolynomial:
    """``x -> Ebar_k(c*x + d)`` on ``[lo, hi]`` for rational ``c != 0``."""
    c, d, lo, hi = Fraction(c), Fraction(d), Fraction(lo), Fraction(hi)
    if c == 0:
        raise ValueError("c must be nonzero")
    if lo >= hi:
        raise ValueError("need lo < hi")
    u0, u1 = sorted((c * lo + d, c * hi + d))
    crossings = [(n - d) / c for n in range(math.floor(u0) + 1, math.ceil(u1))]
    bps = (lo, *sorted(crossings), hi)
    E = euler_polynomial(k)
    pieces = []
    for a, b in zip(bps, bps[1:]):
        w = floor_frac(c * (a + b) / 2 + d).whole
        piece = poly_affine_compose(E, c, d - w)
        pieces.append(-piece if w % 2 else piece)
    return PiecewisePolynomial(bps, tuple(pieces))


def quasi_euler_piecewise(k: int, c: int, hi: int) -> PiecewisePolynomial:
    """``x -> Ebar_k(c*x)`` on ``[0, hi]``, broken at every ``j/c``."""
    if c < 1 or hi < 1:
        raise ValueError("c and hi must be positive")
    return quasi_euler_affine(k, c, 0, 0, hi)


def integrate_quasi_product(p: int, n: int, a: int, b: int) -> Fraction:
    """Exact value of int_0^1 Ebar_p(a x) Ebar_n(b x) dx."""
    return (quasi_euler_piecewise(p, a, 1) * quasi_euler_piecewise(n, b, 1)).integrate()


def integral_lemma_value(p: int, n: int, a: int, b: int) -> Fraction:
    """Closed form of the product integral for odd coprime ``a, b``."""
    if p < 0 or n < 0:
        raise PreconditionError("p and n must be nonnegative")
    require_odd_coprime(a, b)
    sign = 1 if (n + 1) % 2 == 0 else -1
    denom = (n + 1) * binomial(p + n + 1, n + 1) * a ** (n + 1) * b ** (p + 1)
    return 2 * sign * euler_at_zero(p + n + 1) / denom


def sign_integral(a: int, b: int) -> Fraction:
    """int_0^1 (-1)^([ax] + [bx]) dx, which equals 1/(ab)."""
    require_odd_coprime(a, b)
    return integrate_quasi_product(0, 0, a, b)


def x_weighted_integral(a: int) -> Fraction:
    """int_0^1 (-1)^[ax] x dx."""
    if a < 1:
        raise PreconditionError(f"a must be positive, got {a}")
    return (quasi_euler_piecewise(0, a, 1) * Polynomial.monomial(1)).integrate()


def boole_sum_check(f: Polynomial, alpha: int, beta: int, m: int) -> tuple[Fraction, Fraction]:
    """Both sides of Boole's summation formula for polynomial ``f`` on ``[alpha, beta]``."""
    if m < 1:
        raise PreconditionError(f"m must be positive, got {m}")
    if alpha >= beta:
        raise PreconditionError(f"need alpha < beta, got {alpha} >= {beta}")

    lhs = 2 * sum((-poly_eval(f, j) if j % 2 else poly_eval(f, j)) for j in range(alpha, beta))

    sign_beta = -1 if (beta - 1) % 2 else 1
    sign_alpha = -1 if alpha % 2 else 1
    boundary = Fraction(0)
    for k in range(m):
        dk = poly_derivative(f, k)
        boundary += euler_at_zero(k) / math.factorial(k) * (
            sign_beta * poly_eval(dk, beta) + sign_alpha * poly_eval(dk, alpha)
        )
    kernel = quasi_euler_affine(m - 1, -1, 0, alpha, beta)
    remainder = (kernel * poly_derivative(f, m)).integrate() / math.factorial(m - 1)
    return Fraction(lhs), boundary + remainder


def _check_fourier_domain(p: int, x: Fraction) -> None:
    if p < 0:
        raise PreconditionError(f"p must be nonnegative, got {p}")
    if p == 0 and not 0 < x < 1:
        raise PreconditionError(f"p = 0 needs 0 < x < 1, got {x}")
    if p > 0 and not 0 <= x < 1:
        raise PreconditionError(f"p >= 1 needs 0 <= x < 1, got {x}")


def _sin_pi(num: int, den: int) -> float:
    """sin(pi * num / den), exact at multiples of pi/2."""
    r = num % (2 * den)
    sign = 1.0
    if r >= den:
        r -= den
        sign = -1.0
    if r == 0:
        return 0.0
    if 2 * r == den:
        return sign
    r = min(r, den - r)
    return sign * math.sin(math.pi * r / den)


def fourier_partial(p: int, x: Number, K: int) -> float:
    """K-term partial sum of the sine series of Ebar_p on [0, 1)."""
    x = Fraction(x)
    _check_fourier_domain(p, x)
    if K < 1:
        raise PreconditionError(f"K must be positive, got {K}")
    n, d = x.numerator, x.denominator
    # phase / pi = (2k+1) x - p/2 = ((2k+1) 2n - p d) / 2d, reduced exactly
    terms = (_sin_pi((2 * k + 1) * 2 * n - p * d, 2 * d) / (2 * k + 1) ** (p + 1) for k in range(K))
    return 4 * math.factorial(p) / math.pi ** (p + 1) * math.fsum(terms)


@dataclass(frozen=True)
class FourierApproximation:
    p: int
    x: Fraction
    terms: int
    value: float
    exact: Fraction

    @property
    def abs_error(self) -> float:
        return abs(self.value - float(self.exact))


def fourier_approximation(p: int, x: Number, K: int) -> FourierApproximation:
    x = Fraction(x)
    return FourierApproximation(p, x, K, fourier_partial(p, x, K), quasi_euler_eval(p, x))
