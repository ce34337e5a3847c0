"""Independent reference computations.

Nothing here imports the package; each oracle takes a different route from
the code it checks.
"""
from __future__ import annotations

import math
from fractions import Fraction

import sympy

_X = sympy.Symbol("x")


def euler_numbers_secant(n: int) -> list[int]:
    """Euler numbers from sum_{k even} C(m,k) E_k = 0 (m even >= 2), odd ones zero."""
    E = [0] * (n + 1)
    E[0] = 1
    for m in range(2, n + 1, 2):
        E[m] = -sum(math.comb(m, k) * E[k] for k in range(0, m, 2))
    return E


def bernoulli_numbers_at(n: int) -> list[Fraction]:
    """B_0..B_n via Akiyama-Tanigawa, returned with B_1 = -1/2."""
    A = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        A[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            A[j - 1] = j * (A[j - 1] - A[j])
        out.append(A[0])
    if n >= 1:
        out[1] = -out[1]
    return out


def euler_at_zero_via_bernoulli(n: int) -> Fraction:
    """E_n(0) = -2 (2^(n+1) - 1) B_(n+1) / (n+1)."""
    B = bernoulli_numbers_at(n + 1)
    return -2 * (2 ** (n + 1) - 1) * B[n + 1] / (n + 1)


def _to_fraction(v) -> Fraction:
    v = sympy.nsimplify(v)
    return Fraction(int(v.p), int(v.q))


def sympy_euler_coeffs(n: int) -> list[Fraction]:
    poly = sympy.Poly(sympy.euler(n, _X), _X)
    return [_to_fraction(c) for c in reversed(poly.all_coeffs())]


def sympy_bernoulli_coeffs(n: int) -> list[Fraction]:
    poly = sympy.Poly(sympy.bernoulli(n, _X), _X)
    return [_to_fraction(c) for c in reversed(poly.all_coeffs())]


def _eval(coeffs, x):
    return sum(c * x**i for i, c in enumerate(coeffs))


def quasi_euler_ref(k: int, x: Fraction) -> Fraction:
    w = math.floor(x)
    return (-1) ** (w % 2) * _eval(sympy_euler_coeffs(k), x - w)


def T_ref(p: int, a: int, b: int) -> Fraction:
    """Apostol-Dedekind sum summed term by term with sympy polynomials."""
    Ep = sympy_euler_coeffs(p)
    total = Fraction(0)
    for j in range(b):
        u = Fraction(a * j, b)
        w = math.floor(u)
        ebar_p = (-1) ** (w % 2) * _eval(Ep, u - w)
        ebar_1 = Fraction(j, b) - Fraction(1, 2)
        total += (-1) ** j * ebar_p * ebar_1
    return 2 * total


def midpoint_product_integral(p: int, n: int, a: int, b: int, panels: int = 100_000) -> float:
    """Floating-point midpoint rule for int_0^1 Ebar_p(ax) Ebar_n(bx) dx."""
    import numpy as np

    x = (np.arange(panels) + 0.5) / panels

    def ebar(k, c):
        u = c * x
        w = np.floor(u)
        coeffs = [float(v) for v in reversed(sympy_euler_coeffs(k))]
        return np.where(w % 2, -1.0, 1.0) * np.polyval(coeffs, u - w)

    return float(np.mean(ebar(p, a) * ebar(n, b)))
