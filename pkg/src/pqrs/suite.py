"""Batch runner driving every identity and algebra check."""

from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass, field
from fractions import Fraction

from pqrs import fock, ops, poly, pqcore
from pqrs.errors import ImaginaryResidueTooLarge, PreconditionViolated
from pqrs.reports import AlgebraReport, LinOpReport, RescalingReport
from pqrs.xpoly import XPoly

SUITES = ("pqcore", "poly", "ops", "fock")


def default_seed() -> int:
    return int(os.environ.get("PQRS_SEED", "0"))


@dataclass(frozen=True)
class SuiteConfig:
    nmax: int = 10
    fock_nmax: int = 8
    p: Fraction | None = None
    q: Fraction | None = None
    format: str | None = None
    suites: tuple[str, ...] = SUITES
    seed: int = field(default_factory=default_seed)

    def __post_init__(self):
        if self.nmax < 1:
            raise ValueError("nmax must be >= 1")
        if self.fock_nmax < 3:
            raise ValueError("fock nmax must be >= 3")
        unknown = set(self.suites) - set(SUITES)
        if unknown:
            raise ValueError(f"unknown suites: {', '.join(sorted(unknown))}")


@dataclass(frozen=True)
class Row:
    """One report line: a named identity at some indices, pass flag and printable detail."""

    suite: str
    name: str
    indices: tuple = ()
    passed: bool = True
    detail: str = ""
    payload: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        if self.payload:
            return {"suite": self.suite, **self.payload}
        return {
            "suite": self.suite,
            "name": self.name,
            "indices": list(self.indices),
            "pass": self.passed,
            "detail": self.detail,
        }


def _lin(suite: str, r: LinOpReport) -> Row:
    return Row(suite, r.name, r.indices, r.passed, "" if r.passed else str(r.residual), r.to_json())


def _alg(suite: str, r: AlgebraReport) -> Row:
    return Row(suite, r.relation, (r.interior,), r.passed, "" if r.passed else str(r.worst_residual), r.to_json())


def _rescaling(suite: str, r: RescalingReport) -> Row:
    lhs, rhs = r.mismatch
    return Row(suite, "no_rescaling", (), r.passed, f"p={r.p0} q={r.q0}: {lhs} vs {rhs}", r.to_json())


def _random_rational(rng: random.Random, lo: Fraction, hi: Fraction, den: int = 12) -> Fraction:
    d = rng.randint(1, den)
    return Fraction(rng.randint(math.ceil(lo * d), math.floor(hi * d)), d)


def run_pqcore(cfg: SuiteConfig, rng: random.Random) -> list[Row]:
    rows = []
    for n in range(cfg.nmax + 1):
        at_p1 = pqcore.q_number(n) - pqcore.q_number_laurent(n)
        at_p1_q1 = pqcore.pq_number(n).subs(p=1, q=1) - n
        rows.append(_lin("pqcore", LinOpReport("number_specialization", (n,), XPoly([at_p1, at_p1_q1]))))
    for n in range(cfg.nmax + 1):
        for k in range(n + 1):
            rows.append(_lin("pqcore", pqcore.check_binomial_dual(n, k)))
            rows.append(_lin("pqcore", pqcore.check_binomial_p_power_identity(n, k)))
            rows.append(_lin("pqcore", pqcore.check_binomial_symmetry(n, k)))
    for n in range(cfg.nmax):
        for k in range(n + 2):
            rows.append(_lin("pqcore", pqcore.check_pqid(n, k)))
    pairs = [(Fraction(1), Fraction(1)), (Fraction(2), Fraction(3)), (Fraction(1), Fraction(0))]
    while len(pairs) < 13:
        a = _random_rational(rng, Fraction(-4), Fraction(4))
        if a:
            pairs.append((a, _random_rational(rng, Fraction(-4), Fraction(4))))
    for a, b in pairs:
        for n in range(min(cfg.nmax, 8) + 1):
            r = pqcore.check_shifted_factorial_reduction(a, b, n)
            row = _lin("pqcore", r)
            rows.append(Row(row.suite, f"{r.name}[a={a},b={b}]", row.indices, row.passed, row.detail, row.payload))
    return rows


def run_poly(cfg: SuiteConfig, rng: random.Random) -> list[Row]:
    rows = []
    for n in range(cfg.nmax + 1):
        for check in (poly.check_classical_limit, poly.check_self_reciprocal, poly.check_sw_inversion,
                      poly.check_special_qinv_q):
            rows.append(_lin("poly", check(n)))

    if cfg.p is not None and cfg.q is not None:
        points = [(cfg.p, cfg.q)]
    else:
        points = [(Fraction(2), Fraction(3)), (Fraction(3), Fraction(2))]
        while len(points) < 8:
            pq = (_random_rational(rng, Fraction(1, 4), Fraction(4)), _random_rational(rng, Fraction(1, 4), Fraction(4)))
            if pq[0] != 1 and pq[1] != 1:
                points.append(pq)
    for p0, q0 in points:
        try:
            rows.append(_rescaling("poly", poly.check_no_rescaling(p0, q0)))
        except PreconditionViolated as exc:
            rows.append(Row("poly", "no_rescaling_degenerate", (), True, str(exc)))
    for p0, q0 in ((Fraction(1), Fraction(2)), (Fraction(5, 2), Fraction(1))):
        try:
            poly.check_no_rescaling(p0, q0)
            rows.append(Row("poly", "no_rescaling_degenerate", (), False, f"p={p0} q={q0} not rejected"))
        except PreconditionViolated:
            rows.append(Row("poly", "no_rescaling_degenerate", (), True, f"p={p0} q={q0} rejected"))

    hp, hq = (cfg.p, cfg.q) if cfg.p is not None and cfg.q is not None else (Fraction(2), Fraction(3))
    for n in range(cfg.nmax + 1):
        theta = rng.uniform(0, 2 * math.pi)
        try:
            poly.hermite_eval(n, theta, hp, hq)
            rows.append(Row("poly", "hermite_real", (n,), True))
        except ImaginaryResidueTooLarge as exc:
            rows.append(Row("poly", "hermite_real", (n,), False, str(exc)))
    theta = rng.uniform(0, 2 * math.pi)
    err = abs(poly.hermite_eval(1, theta, hp, hq) - 2 * math.cos(theta))
    rows.append(Row("poly", "hermite_n1_2cos", (1,), err <= 1e-12, f"error {err:.3e}" if err > 1e-12 else ""))
    return rows


def run_ops(cfg: SuiteConfig, rng: random.Random) -> list[Row]:
    rows = []
    for n in range(1, cfg.nmax + 1):
        rows.append(_lin("ops", ops.check_recurrence_pqro(n)))
        rows.append(_lin("ops", ops.check_recurrence_qro(n)))
    for n in range(cfg.nmax + 1):
        for k in range(n + 2):
            rows.append(_lin("ops", ops.check_qid(n, k)))
    for n in range(cfg.nmax + 1):
        rows.extend(_lin("ops", r) for r in ops.check_ladder_suite(n))
        rows.extend(_lin("ops", r) for r in ops.check_ladder_suite(n, q_case=True))
        rows.append(_lin("ops", ops.check_diffeq(n)))
        rows.append(_lin("ops", ops.check_diffeq(n, q_case=True)))
        rows.append(_lin("ops", ops.check_nilpotent(n)))
        rows.extend(_lin("ops", r) for r in ops.check_classical_suite(n))
    return rows


def run_fock(cfg: SuiteConfig, rng: random.Random) -> list[Row]:
    m = cfg.fock_nmax
    reports = (
        fock.check_pq_oscillator(m)
        + fock.check_pq_oscillator(m, p=1)
        + fock.check_pq_oscillator(m, p=1, q=1)
        + fock.check_js_sl2(m)
        + fock.check_js_uq_sl2(m)
    )
    return [_alg("fock", r) for r in reports]


RUNNERS = {"pqcore": run_pqcore, "poly": run_poly, "ops": run_ops, "fock": run_fock}


def run_suites(cfg: SuiteConfig) -> list[Row]:
    """Run the selected suites in canonical order; each suite gets its own seeded RNG."""
    rows: list[Row] = []
    for name in SUITES:
        if name in cfg.suites:
            rows.extend(RUNNERS[name](cfg, random.Random(f"{cfg.seed}:{name}")))
    return rows
