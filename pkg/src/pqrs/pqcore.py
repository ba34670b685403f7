"""(p,q)-numbers, factorials, binomial coefficients and shifted factorials.

The one-parameter q-objects are not separate code paths: they are the
``p = 1`` specializations of the two-parameter ones.  The only standalone
q-construction is :class:`UniPoly`, the Gaussian binomial in a formal base
``t``, used to exercise the base ``q/p`` reduction identities.
"""

from __future__ import annotations

from collections.abc import Mapping
from fractions import Fraction
from functools import lru_cache

from pqrs.reports import LinOpReport, scalar_report
from pqrs.scalar import ONE, ZERO, P, Q, Scalar, as_rational
from pqrs.xpoly import XPoly


@lru_cache(maxsize=None)
def pq_number(n: int) -> Scalar:
    """``[n]_{p,q} = (p^n - q^n)/(p - q)`` as ``sum_k p^(n-1-k) q^k``."""
    if n < 0:
        raise ValueError("pq_number needs n >= 0; use pq_number_laurent for negative n")
    return Scalar({(2 * (n - 1 - k), 2 * k): 1 for k in range(n)})


def q_number(n: int) -> Scalar:
    """Heine's ``[n]_q``: the ``p = 1`` slice of :func:`pq_number`."""
    return pq_number(n).subs(p=1)


def pq_number_laurent(m: int) -> Scalar:
    """``(p^m - q^m)/(p - q)`` for any integer ``m``, by exact Laurent division."""
    return (P**m - Q**m).div_exact(P - Q) if m else ZERO


def q_number_laurent(m: int) -> Scalar:
    """``(1 - q^m)/(1 - q)`` for any integer ``m``; e.g. ``m = -1`` gives ``-q^-1``."""
    return (ONE - Q**m).div_exact(ONE - Q) if m else ZERO


@lru_cache(maxsize=None)
def pq_factorial(n: int) -> Scalar:
    if n < 0:
        raise ValueError("factorial of a negative index")
    return ONE if n == 0 else pq_factorial(n - 1) * pq_number(n)


def q_factorial(n: int) -> Scalar:
    return pq_factorial(n).subs(p=1)


@lru_cache(maxsize=None)
def pq_binomial(n: int, k: int) -> Scalar:
    """``[n k]_{p,q}`` by the factorial quotient; zero outside ``0 <= k <= n``."""
    if n < 0 or k < 0 or k > n:
        return ZERO
    return pq_factorial(n).div_exact(pq_factorial(k) * pq_factorial(n - k))


def q_binomial(n: int, k: int) -> Scalar:
    return pq_binomial(n, k).subs(p=1)


def pq_binomial_rows(nmax: int) -> list[list[Scalar]]:
    """Rows ``0..nmax`` of the (p,q)-Pascal triangle from the three-term recurrence

    ``[n+1, k] = p^k [n, k] + p^(n-k+1) [n, k-1] - (p^n - q^n) [n-1, k-1]``

    started from the rows ``n = 0`` and ``n = 1``.
    """
    rows = [[ONE], [ONE, ONE]]

    def at(n: int, k: int) -> Scalar:
        return rows[n][k] if 0 <= n < len(rows) and 0 <= k <= n else ZERO

    for n in range(1, nmax):
        gap = P**n - Q**n
        rows.append(
            [
                P**k * at(n, k) + P ** (n - k + 1) * at(n, k - 1) - gap * at(n - 1, k - 1)
                for k in range(n + 2)
            ]
        )
    return rows[: nmax + 1]


def pq_binomial_pascal(n: int, k: int) -> Scalar:
    if n < 0 or k < 0 or k > n:
        return ZERO
    return pq_binomial_rows(n)[n][k]


class UniPoly:
    """Laurent polynomial in a single formal variable ``t`` over Q."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        coeffs = coeffs or {}
        self._coeffs: dict[int, Fraction] = {
            int(e): as_rational(c) for e, c in sorted(coeffs.items()) if c
        }

    @classmethod
    def from_list(cls, values, low: int = 0) -> UniPoly:
        return cls({low + i: v for i, v in enumerate(values)})

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._coeffs)

    def __add__(self, other: UniPoly) -> UniPoly:
        acc = dict(self._coeffs)
        for e, c in other._coeffs.items():
            acc[e] = acc.get(e, 0) + c
        return UniPoly(acc)

    def __sub__(self, other: UniPoly) -> UniPoly:
        acc = dict(self._coeffs)
        for e, c in other._coeffs.items():
            acc[e] = acc.get(e, 0) - c
        return UniPoly(acc)

    def __mul__(self, other) -> UniPoly:
        if not isinstance(other, UniPoly):
            other = UniPoly({0: other})
        acc: dict[int, Fraction] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return UniPoly(acc)

    __rmul__ = __mul__

    def shift(self, k: int) -> UniPoly:
        return UniPoly({e + k: c for e, c in self._coeffs.items()})

    def to_scalar(self, t: Scalar) -> Scalar:
        """Substitute a monomial Scalar for ``t``."""
        total = ZERO
        for e, c in self._coeffs.items():
            total = total + t**e * c
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(self._coeffs.items()))

    def __repr__(self) -> str:
        return f"UniPoly({self._coeffs})"


@lru_cache(maxsize=None)
def q_binomial_uni(n: int, k: int) -> UniPoly:
    """Gaussian binomial in ``t`` via ``[n, k] = [n-1, k-1] + t^k [n-1, k]``."""
    if n < 0 or k < 0 or k > n:
        return UniPoly()
    if k == 0 or k == n:
        return UniPoly({0: 1})
    return q_binomial_uni(n - 1, k - 1) + q_binomial_uni(n - 1, k).shift(k)


def q_shifted_factorial_uni(a, n: int) -> UniPoly:
    """``(a; t)_n = prod_{k<n} (1 - a t^k)`` for rational ``a``."""
    a = as_rational(a)
    out = UniPoly({0: 1})
    for k in range(n):
        out = out * UniPoly({0: 1, k: -a}) if k else out * UniPoly({0: 1 - a})
    return out


def pq_shifted_factorial(a, b, n: int) -> Scalar:
    """``(a, b; p, q)_n = prod_{k<n} (a p^k - b q^k)``."""
    a, b = as_rational(a), as_rational(b)
    out = ONE
    for k in range(n):
        out = out * (P**k * a - Q**k * b)
    return out


def check_shifted_factorial_reduction(a, b, n: int) -> LinOpReport:
    """Compare ``(a,b;p,q)_n`` with ``a^n p^(n(n-1)/2) (b/a; q/p)_n``."""
    a, b = as_rational(a), as_rational(b)
    if a == 0:
        raise ValueError("reduction identity needs a != 0")
    base = Scalar.monomial(1, p=-1, q=1)
    rhs = q_shifted_factorial_uni(b / a, n).to_scalar(base) * Scalar.monomial(
        a**n, p=n * (n - 1) // 2
    )
    return scalar_report("shifted_factorial_reduction", (n,), pq_shifted_factorial(a, b, n) - rhs)


def check_binomial_p_power_identity(n: int, k: int) -> LinOpReport:
    """Compare ``[n k]_{p,q}`` with ``p^(k(n-k)) [n k]_{q/p}``."""
    base = Scalar.monomial(1, p=-1, q=1)
    rhs = q_binomial_uni(n, k).to_scalar(base) * Scalar.monomial(1, p=k * (n - k))
    return scalar_report("binomial_p_power", (n, k), pq_binomial(n, k) - rhs)


def check_binomial_dual(n: int, k: int) -> LinOpReport:
    """Factorial-quotient and recurrence constructions of ``[n k]_{p,q}`` agree."""
    return scalar_report("binomial_dual", (n, k), pq_binomial(n, k) - pq_binomial_pascal(n, k))


def check_pqid(n: int, k: int) -> LinOpReport:
    """Residual of the (p,q)-Pascal recurrence evaluated on factorial-quotient binomials."""
    rhs = (
        P**k * pq_binomial(n, k)
        + P ** (n - k + 1) * pq_binomial(n, k - 1)
        - (P**n - Q**n) * pq_binomial(n - 1, k - 1)
    )
    return scalar_report("pqid", (n, k), pq_binomial(n + 1, k) - rhs)


def check_binomial_symmetry(n: int, k: int) -> LinOpReport:
    """``[n k] = [n n-k]`` (residual coefficient 0) and ``p <-> q`` invariance (coefficient 1)."""
    b = pq_binomial(n, k)
    return LinOpReport("binomial_symmetry", (n, k), XPoly([b - pq_binomial(n, n - k), b - b.swap_pq()]))
