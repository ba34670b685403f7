"""Rogers-Szegő type polynomial families and their evaluation.

``H_n(x;p,q) = sum_k [n k]_{p,q} x^k`` is the central object.  The other
families are specializations or substitutions of it, each built directly
from its own defining sum so that the cross-checks below compare two
independent constructions.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from pqrs.errors import ImaginaryResidueTooLarge, PreconditionViolated
from pqrs.pqcore import pq_binomial, pq_factorial, q_binomial_uni
from pqrs.reports import LinOpReport, RescalingCandidate, RescalingReport
from pqrs.scalar import Q, Scalar, as_rational
from pqrs.xpoly import XPoly

IMAG_TOLERANCE = 1e-10


@lru_cache(maxsize=None)
def pq_rs_poly(n: int) -> XPoly:
    """The (p,q)-Rogers-Szegő polynomial ``H_n(x;p,q)``."""
    return XPoly(pq_binomial(n, k) for k in range(n + 1))


def rs_poly(n: int) -> XPoly:
    """The classical Rogers-Szegő polynomial ``H_n(x;q)`` (``p = 1``)."""
    return pq_rs_poly(n).subs(p=1)


def classical_poly(n: int) -> XPoly:
    """``h_n(x) = (1 + x)^n``."""
    return XPoly(math.comb(n, k) for k in range(n + 1))


def special_rs_qinv_q(n: int) -> XPoly:
    """``H_n(x;q^-1,q) = sum_k [n k]_{q^2} q^(-k(n-k)) x^k``, built from the Gaussian binomial."""
    q_squared = Scalar.monomial(1, q=2)
    return XPoly(
        q_binomial_uni(n, k).to_scalar(q_squared) * Scalar.monomial(1, q=-k * (n - k))
        for k in range(n + 1)
    )


def sw_poly(n: int) -> XPoly:
    """(p,q)-Stieltjes-Wigert ``G_n(x;p,q) = sum_k [n k]_{p,q} (pq)^(-k(n-k)) x^k``."""
    return XPoly(
        pq_binomial(n, k) * Scalar.monomial(1, p=-k * (n - k), q=-k * (n - k))
        for k in range(n + 1)
    )


def check_sw_inversion(n: int) -> LinOpReport:
    """``G_n(x;p,q) = H_n(x;1/p,1/q)``."""
    return LinOpReport("sw_inversion", (n,), sw_poly(n) - pq_rs_poly(n).map(Scalar.invert_pq))


def check_special_qinv_q(n: int) -> LinOpReport:
    """Direct ``q^2``-Gaussian sum versus ``p -> q^-1`` in ``H_n(x;p,q)``."""
    substituted = pq_rs_poly(n).subs(p=Q**-1)
    return LinOpReport("special_qinv_q", (n,), special_rs_qinv_q(n) - substituted)


def check_self_reciprocal(n: int) -> LinOpReport:
    h = pq_rs_poly(n)
    return LinOpReport("self_reciprocal", (n,), h.reciprocal(n) - h)


def check_classical_limit(n: int) -> LinOpReport:
    """``H_n(x;1,1) = (1+x)^n``."""
    return LinOpReport("classical_limit", (n,), pq_rs_poly(n).subs(p=1, q=1) - classical_poly(n))


@dataclass(frozen=True)
class NormalizedState:
    """``psi_n = hpoly / sqrt(norm_squared)``, held without forming the square root."""

    n: int
    hpoly: XPoly
    norm_squared: Scalar


def normalized_state(n: int) -> NormalizedState:
    return NormalizedState(n, pq_rs_poly(n), pq_factorial(n))


def eval_exact(f: XPoly, x0, p0, q0) -> Fraction:
    """Horner evaluation of ``f`` at ``x = x0`` and ``(p, q) = (p0, q0)``."""
    x0 = as_rational(x0)
    acc = Fraction(0)
    for c in reversed(f.coeffs):
        acc = acc * x0 + c.substitute(p0, q0)
    return acc


def hermite_components(n: int, theta: float, p0, q0) -> tuple[float, float]:
    """Real and imaginary parts of ``e^(-in theta) H_n(e^(2i theta); p0, q0)``.

    Terms ``k`` and ``n - k`` are summed as conjugate pairs, so the
    imaginary part is ``sum (c_k - c_(n-k)) sin((2k-n) theta)``: exactly zero
    for symmetric coefficients, and a direct measure of any asymmetry.
    """
    p0, q0 = as_rational(p0), as_rational(q0)
    if p0 == 0 or q0 == 0:
        raise PreconditionViolated("continuous Hermite evaluation needs nonzero p, q")
    c = [float(b.substitute(p0, q0)) for b in pq_rs_poly(n).coeffs]
    total = 0j
    for k in range((n + 1) // 2):
        phase = cmath.exp(1j * ((2 * k - n) * theta))
        total += c[k] * phase + c[n - k] * phase.conjugate()
    if n % 2 == 0:
        total += c[n // 2]
    return total.real, total.imag


def hermite_eval(n: int, theta: float, p0, q0) -> float:
    """Continuous (p,q)-Hermite value ``H_n(cos theta | p0, q0)``."""
    real, imag = hermite_components(n, theta, p0, q0)
    if abs(imag) > IMAG_TOLERANCE:
        raise ImaginaryResidueTooLarge(f"|Im| = {abs(imag):.3e} for n={n}, theta={theta}")
    return real


def check_no_rescaling(p0, q0) -> RescalingReport:
    """Show no ``(lam, q')`` makes ``H_n(lam x; q')`` match ``H_n(x;p0,q0)`` for n = 2 and 3.

    Matching at ``n = 2`` forces ``c = 1``, ``lam = +-1`` and
    ``q' = lam (p0 + q0) - 1``; each candidate is then tested at ``n = 3``.
    """
    p0, q0 = as_rational(p0), as_rational(q0)
    if p0 == 1 or q0 == 1:
        raise PreconditionViolated(f"(p, q) = ({p0}, {q0}) reduces to a one-parameter family")
    target = pq_rs_poly(3).subs(p=p0, q=q0)
    rs3 = rs_poly(3)
    candidates = []
    for lam in (1, -1):
        qp = lam * (p0 + q0) - 1
        scaled = XPoly(c.subs(q=qp) * lam**k for k, c in enumerate(rs3.coeffs))
        candidates.append(RescalingCandidate(lam, qp, target - scaled))
    return RescalingReport(p0, q0, tuple(candidates))
