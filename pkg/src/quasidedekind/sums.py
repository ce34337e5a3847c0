"""Apostol-Dedekind sums with quasi-periodic Euler functions, and friends.

``T_p(a, b) = 2 * sum_{j<b} (-1)^j Ebar_p(aj/b) Ebar_1(j/b)`` is evaluated for
any positive ``a, b``; the parity/coprimality hypotheses are enforced only by
the operations whose identities need them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .euler import euler_at_zero, periodic_bernoulli_eval, quasi_euler_eval

__all__ = [
    "PreconditionError",
    "SumResult",
    "ReciprocityReport",
    "apostol_dedekind_T",
    "weighted_T",
    "t_sum",
    "generalized_dedekind_S",
    "rho",
    "reciprocity_sides",
    "distribution_check",
]


class PreconditionError(ValueError):
    """Raised when arguments violate the hypotheses of an identity."""


def _require_positive(**kw: int) -> None:
    for name, v in kw.items():
        if not isinstance(v, int) or v < 1:
            raise PreconditionError(f"{name} must be a positive integer, got {v!r}")


def _require_nonnegative(**kw: int) -> None:
    for name, v in kw.items():
        if not isinstance(v, int) or v < 0:
            raise PreconditionError(f"{name} must be a nonnegative integer, got {v!r}")


def _require_odd(**kw: int) -> None:
    for name, v in kw.items():
        if v % 2 == 0:
            raise PreconditionError(f"{name} must be odd, got {v}")


def _require_even(**kw: int) -> None:
    for name, v in kw.items():
        if v % 2:
            raise PreconditionError(f"{name} must be even, got {v}")


def _require_coprime(a: int, b: int) -> None:
    if math.gcd(a, b) != 1:
        raise PreconditionError(f"a and b must be coprime, got gcd({a}, {b}) = {math.gcd(a, b)}")


def require_odd_coprime(a: int, b: int) -> None:
    _require_positive(a=a, b=b)
    _require_odd(a=a, b=b)
    _require_coprime(a, b)


@dataclass(frozen=True)
class SumResult:
    p: int
    a: int
    b: int
    value: Fraction
    path: Literal["direct", "weighted-identity"] = "direct"


@dataclass(frozen=True)
class ReciprocityReport:
    p: int
    a: int
    b: int
    lhs: Fraction
    rhs: Fraction
    parity_case: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def apostol_dedekind_T(p: int, a: int, b: int) -> Fraction:
    _require_nonnegative(p=p)
    _require_positive(a=a, b=b)
    total = Fraction(0)
    for j in range(b):
        # the j = 0 term keeps Ebar_1(0) = E_1(0) = -1/2
        term = quasi_euler_eval(p, Fraction(a * j, b)) * quasi_euler_eval(1, Fraction(j, b))
        total += -term if j % 2 else term
    return 2 * total


def weighted_T(p: int, a: int, b: int) -> Fraction:
    """T_p(a,b) via (2/b) sum (-1)^j j Ebar_p(aj/b) - b^-p E_p(0).

    Valid for odd coprime ``a, b``, where the plain alternating sum of
    Ebar_p(aj/b) collapses to b^-p E_p(0).
    """
    _require_nonnegative(p=p)
    require_odd_coprime(a, b)
    total = Fraction(0)
    for j in range(1, b):
        term = j * quasi_euler_eval(p, Fraction(a * j, b))
        total += -term if j % 2 else term
    return Fraction(2, b) * total - euler_at_zero(p) / Fraction(b) ** p


def t_sum(p: int, a: int, b: int, path: str = "direct") -> SumResult:
    if path == "direct":
        value = apostol_dedekind_T(p, a, b)
    elif path == "weighted-identity":
        value = weighted_T(p, a, b)
    else:
        raise ValueError(f"unknown evaluation path {path!r}")
    return SumResult(p, a, b, value, path)


def generalized_dedekind_S(p: int, a: int, b: int) -> Fraction:
    if not isinstance(p, int) or p < 1:
        raise PreconditionError(f"S_p needs p >= 1 (the Bernoulli function of order 0 is undefined), got {p!r}")
    _require_positive(a=a, b=b)
    total = Fraction(0)
    for j in range(1, b):  # j = 0 contributes ((0)) = 0
        total += periodic_bernoulli_eval(p, Fraction(a * j, b)) * periodic_bernoulli_eval(1, Fraction(j, b))
    return total


def rho(a: int, b: int) -> int:
    """Sign sum sum_{j<b} (-1)^(j + [aj/b])."""
    require_odd_coprime(a, b)
    return sum(-1 if (j + a * j // b) % 2 else 1 for j in range(b))


def reciprocity_sides(p: int, a: int, b: int) -> ReciprocityReport:
    _require_positive(p=p)
    require_odd_coprime(a, b)
    e0 = [euler_at_zero(k) for k in range(p + 2)]
    if p % 2 == 0:
        lhs = a * b ** (p + 1) * apostol_dedekind_T(p, a, b) + a ** (p + 1) * b * apostol_dedekind_T(p, b, a)
        conv = sum(
            math.comb(p, k) * b**k * e0[k] * a ** (p - k) * e0[p - k] for k in range(p)
        )
        rhs = 2 * e0[p + 1] - a * b * conv
        case = 1
    else:
        lhs = b**p * apostol_dedekind_T(p, a, b) - a**p * apostol_dedekind_T(p, b, a)
        rhs = (a**p - b**p) * e0[p]
        case = 2
    return ReciprocityReport(p, a, b, Fraction(lhs), Fraction(rhs), case)


def distribution_check(p: int, a: int, b: int, q: int) -> tuple[Fraction, Fraction]:
    """(T_p(qa, qb), T_p(a, b) / q) for even ``a`` and odd ``b, q``."""
    _require_nonnegative(p=p)
    _require_positive(a=a, b=b, q=q)
    _require_even(a=a)
    _require_odd(b=b, q=q)
    return apostol_dedekind_T(p, q * a, q * b), apostol_dedekind_T(p, a, b) / q
