"""Difference, scaling and ladder operators acting on :class:`XPoly`.

All ladder identities are stated in the unnormalized basis ``H_n``:
``A_- H_n = [n] H_(n-1)`` and ``A_+ H_n = H_(n+1)``.  This is the
normalized ``psi_n`` form multiplied through by ``sqrt([n]!)``.
"""

from __future__ import annotations

from pqrs.pqcore import pq_factorial, pq_number, q_binomial, q_number
from pqrs.poly import classical_poly, pq_rs_poly, rs_poly
from pqrs.reports import LinOpReport, scalar_report
from pqrs.scalar import ONE, P, Q, Scalar, as_rational
from pqrs.xpoly import XPoly

__all__ = [
    "LinOpReport",
    "d_pq",
    "d_q",
    "d_classical",
    "eta",
    "raise_pq",
    "raise_q",
    "check_recurrence_pqro",
    "check_recurrence_qro",
    "check_qid",
    "check_ladder_suite",
    "check_diffeq",
    "check_nilpotent",
    "check_classical_suite",
]


def d_pq(f: XPoly) -> XPoly:
    """(p,q)-difference operator: ``c x^k -> c [k]_{p,q} x^(k-1)``."""
    return XPoly(c * pq_number(k) for k, c in enumerate(f.coeffs) if k)


def d_q(f: XPoly) -> XPoly:
    """Jackson q-derivative: ``c x^k -> c [k]_q x^(k-1)``."""
    return XPoly(c * q_number(k) for k, c in enumerate(f.coeffs) if k)


def d_classical(f: XPoly) -> XPoly:
    return XPoly(c * k for k, c in enumerate(f.coeffs) if k)


def eta(f: XPoly, s) -> XPoly:
    """Scaling operator ``f(x) -> f(s x)`` for a monomial or rational ``s``."""
    if not isinstance(s, Scalar):
        s = Scalar.const(as_rational(s))
    if not s.is_monomial:
        raise ValueError("scaling base must be a nonzero monomial")
    return XPoly(c * s**k for k, c in enumerate(f.coeffs))


def raise_pq(n: int, f: XPoly) -> XPoly:
    """``(eta_p + p^n x eta_(1/p) - (p - q) x D_pq) f``, the creation operator on level ``n``."""
    return eta(f, P) + (eta(f, P**-1) * P**n).shift() - (d_pq(f) * (P - Q)).shift()


def raise_q(f: XPoly) -> XPoly:
    """``((1 + x) - (1 - q) x D_q) f``."""
    return f + f.shift() - (d_q(f) * (ONE - Q)).shift()


def check_recurrence_pqro(n: int) -> LinOpReport:
    """``H_(n+1) = H_n(px) + p^n x H_n(x/p) - (p - q) x [n] H_(n-1)``."""
    h = pq_rs_poly(n)
    rhs = (
        eta(h, P)
        + (eta(h, P**-1) * P**n).shift()
        - (pq_rs_poly(n - 1) * ((P - Q) * pq_number(n))).shift()
    )
    return LinOpReport("pqro", (n,), pq_rs_poly(n + 1) - rhs)


def check_recurrence_qro(n: int) -> LinOpReport:
    """``H_(n+1) = (1 + x) H_n - (1 - q) x [n]_q H_(n-1)`` for the q-polynomials."""
    h = rs_poly(n)
    rhs = h + h.shift() - (rs_poly(n - 1) * ((ONE - Q) * q_number(n))).shift()
    return LinOpReport("qro", (n,), rs_poly(n + 1) - rhs)


def check_qid(n: int, k: int) -> LinOpReport:
    """``[n+1, k]_q = [n, k]_q + [n, k-1]_q - (1 - q^n) [n-1, k-1]_q``."""
    rhs = q_binomial(n, k) + q_binomial(n, k - 1) - (ONE - Q**n) * q_binomial(n - 1, k - 1)
    return scalar_report("qid", (n, k), q_binomial(n + 1, k) - rhs)


class _Family:
    """Basis polynomials, ladder operators and constants for one deformation."""

    def __init__(self, q_case: bool):
        self.tag = "q" if q_case else "pq"
        self.h = rs_poly if q_case else pq_rs_poly
        self.lower = d_q if q_case else d_pq
        self.number = q_number if q_case else pq_number
        self.p = ONE if q_case else P

    def raise_(self, n: int, f: XPoly) -> XPoly:
        return raise_q(f) if self.tag == "q" else raise_pq(n, f)


def check_ladder_suite(n: int, q_case: bool = False) -> list[LinOpReport]:
    """Lowering, raising, both number products and the deformed commutator on ``H_n``.

    With ``q_case`` the one-parameter operators ``D_q`` and
    ``(1 + x) - (1 - q) x D_q`` act on ``H_n(x;q)``, and the commutator
    relation becomes ``A_- A_+ - q A_+ A_- = 1``.
    """
    fam = _Family(q_case)
    t = fam.tag
    h = fam.h(n)
    below = fam.h(n - 1) if n else XPoly()
    lowered = fam.lower(h)
    raised = fam.raise_(n, h)
    up_down = fam.raise_(n - 1, lowered)
    down_up = fam.lower(raised)
    reports = [
        LinOpReport(f"{t}olo", (n,), lowered - below * fam.number(n)),
        LinOpReport(f"{t}oro", (n,), raised - fam.h(n + 1)),
        LinOpReport(f"{t}on{t}", (n,), up_down - h * fam.number(n)),
        LinOpReport(f"{t}on1", (n,), down_up - h * fam.number(n + 1)),
        LinOpReport(f"{t}o", (n,), down_up - up_down * Q - h * fam.p**n),
    ]
    if not q_case:
        reports.append(LinOpReport("pqo_swapped", (n,), down_up - up_down * P - h * Q**n))
    return reports


def check_diffeq(n: int, q_case: bool = False) -> LinOpReport:
    """Annihilator of ``H_n``.

    (p,q): ``(p - q) x D^2 - (eta_p + p^(n-1) x eta_(1/p)) D + [n]_{p,q}``;
    q:     ``(1 - q) x D_q^2 - (1 + x) D_q + [n]_q``.
    """
    if q_case:
        h = rs_poly(n)
        dh = d_q(h)
        residual = (d_q(dh) * (ONE - Q)).shift() - (dh + dh.shift()) + h * q_number(n)
        return LinOpReport("rsdiffeqn", (n,), residual)
    h = pq_rs_poly(n)
    dh = d_pq(h)
    residual = (
        (d_pq(dh) * (P - Q)).shift()
        - (eta(dh, P) + (eta(dh, P**-1) * P ** (n - 1)).shift())
        + h * pq_number(n)
    )
    return LinOpReport("pqdiffeqn", (n,), residual)


def check_nilpotent(n: int) -> LinOpReport:
    """``D_pq^n H_n = [n]_{p,q}!`` (a nonzero constant) and ``D_pq^(n+1) H_n = 0``.

    The residual stacks both defects without overlap: the mismatch of the
    ``n``-th power, then whatever survives the ``(n+1)``-th shifted above it.
    """
    f = pq_rs_poly(n)
    for _ in range(n):
        f = d_pq(f)
    defect = f - XPoly([pq_factorial(n)])
    return LinOpReport("nilpotent", (n,), defect + d_pq(f).shift(defect.degree + 1))


def check_classical_suite(n: int) -> list[LinOpReport]:
    """The undeformed oscillator relations on ``h_n = (1 + x)^n``."""
    h = classical_poly(n)
    below = classical_poly(n - 1) if n else XPoly()
    one_plus_x = XPoly([1, 1])
    dh = d_classical(h)
    return [
        LinOpReport("holo", (n,), dh - below * n),
        LinOpReport("horo", (n,), one_plus_x * h - classical_poly(n + 1)),
        LinOpReport("diffeqn", (n,), one_plus_x * dh - h * n),
        LinOpReport("nplus1", (n,), d_classical(one_plus_x * h) - h * (n + 1)),
    ]

