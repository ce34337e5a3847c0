"""Verification sweeps: every identity as a list of instances plus a checker.

Instance lists are built deterministically from a :class:`SweepConfig`; the
checkers are module-level so they can be shipped to worker processes.
"""
from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from . import calculus, sums
from .euler import euler_at_zero, quasi_euler_eval
from .exact import Polynomial, format_rational

FOURIER_TOL = 1e-3
FOURIER_POINTS = (Fraction(0), Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3))
BOOLE_INSTANCES = 200


@dataclass(frozen=True)
class SweepConfig:
    p_max: int = 8
    a_max: int = 25
    b_max: int | None = None
    q_max: int = 9
    fourier_terms: int = 10_000
    seed: int = 0
    parallelism: int = 1

    def __post_init__(self):
        if self.b_max is None:
            object.__setattr__(self, "b_max", self.a_max)
        for name in ("p_max", "a_max", "b_max", "q_max", "fourier_terms", "parallelism"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")

    def rng(self, identity: str) -> random.Random:
        return random.Random(f"{self.seed}:{identity}")


@dataclass
class VerificationReport:
    identity: str
    instances: int
    failures: list[dict[str, Any]] = field(default_factory=list)
    records: list[dict[str, Any]] | None = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict[str, Any]:
        out = {
            "identity": self.identity,
            "instances": self.instances,
            "passed": self.passed,
            "failures": self.failures,
        }
        if self.records is not None:
            out["records"] = self.records
        return out


def _odd(n: int) -> range:
    return range(1, n + 1, 2)


def _odd_coprime_pairs(cfg: SweepConfig, distinct: bool = False) -> list[tuple[int, int]]:
    return [
        (a, b)
        for a in _odd(cfg.a_max)
        for b in _odd(cfg.b_max)
        if math.gcd(a, b) == 1 and not (distinct and a == b)
    ]


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-300, 300), rng.randint(1, 40))


# instance generators -------------------------------------------------------

def _theorem_instances(cfg: SweepConfig, parity: int) -> list[tuple]:
    return [
        (p, a, b)
        for p in range(1, cfg.p_max + 1)
        if p % 2 == parity
        for a, b in _odd_coprime_pairs(cfg)
        if a < b
    ]


def _lem1_instances(cfg: SweepConfig) -> list[tuple]:
    rng = cfg.rng("lem-1")
    return [(p, b, _random_rational(rng)) for p in range(cfg.p_max + 1) for b in _odd(cfg.b_max) for _ in range(3)]


def _lems3_instances(cfg: SweepConfig) -> list[tuple]:
    rng = cfg.rng("lem-s3")
    return [(p, a, b, _random_rational(rng)) for p in range(cfg.p_max + 1) for a, b in _odd_coprime_pairs(cfg)]


def _lem2_instances(cfg: SweepConfig) -> list[tuple]:
    return [
        (p, n, a, b)
        for a, b in _odd_coprime_pairs(cfg)
        for p in range(cfg.p_max + 1)
        for n in range(cfg.p_max + 1 - p)
    ]


def _proposition_instances(cfg: SweepConfig) -> list[tuple]:
    return [
        (p, a, b, q)
        for p in range(cfg.p_max + 1)
        for a in range(2, cfg.a_max + 1, 2)
        for b in _odd(cfg.b_max)
        for q in _odd(cfg.q_max)
    ]


def _boole_instances(cfg: SweepConfig) -> list[tuple]:
    rng = cfg.rng("boole")
    out = []
    for _ in range(BOOLE_INSTANCES):
        degree = rng.randint(0, 6)
        coeffs = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(degree + 1))
        alpha = rng.randint(-5, 7)
        beta = rng.randint(alpha + 1, 8)
        m = rng.randint(1, 7)
        out.append((coeffs, alpha, beta, m))
    return out


def _fourier_instances(cfg: SweepConfig) -> list[tuple]:
    return [(p, x, cfg.fourier_terms) for p in range(1, cfg.p_max + 1) for x in FOURIER_POINTS]


# checkers -------------------------------------------------------------------

def _check_theorem(p, a, b):
    r = sums.reciprocity_sides(p, a, b)
    return r.lhs, r.rhs


def _check_lem1(p, b, x):
    lhs = sum((-1) ** j * quasi_euler_eval(p, (x + j) / b) for j in range(b))
    return Fraction(lhs), quasi_euler_eval(p, x) / Fraction(b) ** p


def _check_lems3(p, a, b, x):
    lhs = sum((-1) ** j * quasi_euler_eval(p, (x + a * j) / b) for j in range(b))
    return Fraction(lhs), quasi_euler_eval(p, x) / Fraction(b) ** p


def _check_lem2(p, n, a, b):
    return calculus.integrate_quasi_product(p, n, a, b), calculus.integral_lemma_value(p, n, a, b)


def _check_proposition(p, a, b, q):
    return sums.distribution_check(p, a, b, q)


def _check_rho(a, b):
    return Fraction(sums.rho(a, b) + sums.rho(b, a)), Fraction(2)


def _check_boole(coeffs, alpha, beta, m):
    return calculus.boole_sum_check(Polynomial(coeffs), alpha, beta, m)


def _check_pf_def(p, a, b):
    return sums.weighted_T(p, a, b), sums.apostol_dedekind_T(p, a, b)


def _check_sign_integral(a, b):
    return calculus.sign_integral(a, b), Fraction(1, a * b)


def _check_x_int(a):
    return calculus.x_weighted_integral(a), Fraction(1, 2 * a)


def _check_fourier(p, x, K):
    approx = calculus.fourier_approximation(p, x, K)
    return approx.value, approx.exact


IDENTITIES: dict[str, tuple[Callable[[SweepConfig], list[tuple]], Callable[..., tuple]]] = {
    "theorem-1": (lambda cfg: _theorem_instances(cfg, 0), _check_theorem),
    "theorem-2": (lambda cfg: _theorem_instances(cfg, 1), _check_theorem),
    "lem-1": (_lem1_instances, _check_lem1),
    "lem-s3": (_lems3_instances, _check_lems3),
    "lem-2": (_lem2_instances, _check_lem2),
    "proposition": (_proposition_instances, _check_proposition),
    "rho": (lambda cfg: _odd_coprime_pairs(cfg), _check_rho),
    "boole": (_boole_instances, _check_boole),
    "pf-def-1": (lambda cfg: [(p, a, b) for p in range(cfg.p_max + 1) for a, b in _odd_coprime_pairs(cfg)], _check_pf_def),
    "sign-integral": (lambda cfg: _odd_coprime_pairs(cfg), _check_sign_integral),
    "x-int": (lambda cfg: [(a,) for a in _odd(cfg.a_max)], _check_x_int),
    "fourier": (_fourier_instances, _check_fourier),
}


def _run_chunk(identity: str, chunk: list[tuple]) -> list[tuple]:
    check = IDENTITIES[identity][1]
    return [check(*params) for params in chunk]


def _evaluate(identity: str, instances: list[tuple], parallelism: int) -> list[tuple]:
    if parallelism <= 1 or len(instances) < 2:
        return _run_chunk(identity, instances)
    # static stride partition; interleave back to the original order
    chunks = [instances[i::parallelism] for i in range(parallelism)]
    with ProcessPoolExecutor(max_workers=parallelism) as pool:
        parts = list(pool.map(_run_chunk, [identity] * parallelism, chunks))
    results: list[Any] = [None] * len(instances)
    for i, part in enumerate(parts):
        results[i::parallelism] = part
    return results


def _wire(value) -> Any:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, tuple):
        return [_wire(v) for v in value]
    return value


def run_identity(identity: str, cfg: SweepConfig) -> VerificationReport:
    if identity not in IDENTITIES:
        raise KeyError(f"unknown identity {identity!r}; choose from {', '.join(IDENTITIES)}")
    make, _ = IDENTITIES[identity]
    instances = make(cfg)
    results = _evaluate(identity, instances, cfg.parallelism)
    report = VerificationReport(identity, len(instances))
    if identity == "fourier":
        report.records = []
        for (p, x, K), (approx, exact) in zip(instances, results):
            err = abs(approx - float(exact))
            rec = {"params": [p, format_rational(x), K], "approx": approx, "exact": format_rational(exact), "abs_error": err}
            report.records.append(rec)
            if not err < FOURIER_TOL:
                report.failures.append(rec)
        return report
    for params, (lhs, rhs) in zip(instances, results):
        if lhs != rhs:
            report.failures.append({"params": _wire(params), "lhs": _wire(lhs), "rhs": _wire(rhs)})
    return report


def run_verification(identities: list[str], cfg: SweepConfig) -> list[VerificationReport]:
    return [run_identity(name, cfg) for name in identities]
