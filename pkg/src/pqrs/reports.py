"""Result records returned by the identity and algebra checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from pqrs.scalar import ZERO, Scalar
from pqrs.xpoly import XPoly


@dataclass(frozen=True)
class LinOpReport:
    """Outcome of a polynomial identity check; passes iff the residual is zero."""

    name: str
    indices: tuple[int, ...]
    residual: XPoly

    @property
    def passed(self) -> bool:
        return not self.residual

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "indices": list(self.indices),
            "pass": self.passed,
            "residual": self.residual.to_json(),
        }


def scalar_report(name: str, indices: tuple[int, ...], residual: Scalar) -> LinOpReport:
    """Wrap a Scalar residual as a constant polynomial."""
    return LinOpReport(name, tuple(indices), XPoly([residual]))


@dataclass(frozen=True)
class AlgebraReport:
    """Outcome of a matrix relation restricted to its interior block."""

    relation: str
    interior: int
    worst_residual: Scalar = ZERO

    @property
    def passed(self) -> bool:
        return not self.worst_residual

    def to_json(self) -> dict:
        return {
            "relation": self.relation,
            "interior": self.interior,
            "pass": self.passed,
            "worstResidual": self.worst_residual.to_json(),
        }


@dataclass(frozen=True)
class RescalingCandidate:
    """One solution ``(lam, q_prime)`` of the degree-2 matching and its degree-3 defect."""

    lam: int
    q_prime: Fraction
    residual: XPoly


@dataclass(frozen=True)
class RescalingReport:
    """Evidence that ``H_n(x;p0,q0)`` is not a rescaled one-parameter polynomial.

    Unlike :class:`LinOpReport` this passes when every candidate leaves a
    *nonzero* residual at degree 3.
    """

    p0: Fraction
    q0: Fraction
    candidates: tuple[RescalingCandidate, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return bool(self.candidates) and all(c.residual for c in self.candidates)

    @property
    def mismatch(self) -> tuple[Fraction, Fraction]:
        """``(1 + q' + q'^2, [3]_{p0,q0})`` for the ``lam = 1`` candidate."""
        qp = next(c.q_prime for c in self.candidates if c.lam == 1)
        return 1 + qp + qp * qp, self.p0**2 + self.p0 * self.q0 + self.q0**2

    def to_json(self) -> dict:
        return {
            "name": "no_rescaling",
            "p": str(self.p0),
            "q": str(self.q0),
            "pass": self.passed,
            "candidates": [
                {"lambda": c.lam, "qPrime": str(c.q_prime), "residual": c.residual.to_json()}
                for c in self.candidates
            ],
        }
