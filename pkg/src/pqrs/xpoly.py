"""Dense polynomials in ``x`` with :class:`~pqrs.scalar.Scalar` coefficients."""

from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping

from pqrs.scalar import ONE, ZERO, Scalar, ScalarLike, _coerce


class XPoly:
    """Immutable polynomial ``sum_k coeffs[k] * x**k``, lowest power first.

    Trailing zero coefficients are dropped, so the zero polynomial has an
    empty coefficient tuple and degree ``-1``.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[ScalarLike] = ()):
        cs = []
        for c in coeffs:
            s = _coerce(c)
            if s is NotImplemented:
                raise TypeError(f"not a Scalar coefficient: {c!r}")
            cs.append(s)
        while cs and not cs[-1]:
            cs.pop()
        self._coeffs: tuple[Scalar, ...] = tuple(cs)

    @property
    def coeffs(self) -> tuple[Scalar, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def coeff(self, k: int) -> Scalar:
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else ZERO

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    @property
    def is_monic(self) -> bool:
        return bool(self._coeffs) and self._coeffs[-1] == ONE

    def __add__(self, other: XPoly) -> XPoly:
        if not isinstance(other, XPoly):
            return NotImplemented
        n = max(len(self._coeffs), len(other._coeffs))
        return XPoly(self.coeff(k) + other.coeff(k) for k in range(n))

    def __sub__(self, other: XPoly) -> XPoly:
        if not isinstance(other, XPoly):
            return NotImplemented
        n = max(len(self._coeffs), len(other._coeffs))
        return XPoly(self.coeff(k) - other.coeff(k) for k in range(n))

    def __neg__(self) -> XPoly:
        return XPoly(-c for c in self._coeffs)

    def __mul__(self, other) -> XPoly:
        if isinstance(other, XPoly):
            if not self or not other:
                return XPoly()
            out = [ZERO] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, a in enumerate(self._coeffs):
                if not a:
                    continue
                for j, b in enumerate(other._coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
            return XPoly(out)
        s = _coerce(other)
        if s is NotImplemented:
            return NotImplemented
        return XPoly(c * s for c in self._coeffs)

    def __rmul__(self, other) -> XPoly:
        return self.__mul__(other)

    def shift(self, k: int = 1) -> XPoly:
        """Multiply by ``x**k`` (``k < 0`` drops the low coefficients)."""
        if k >= 0:
            return XPoly((ZERO,) * k + self._coeffs) if self else XPoly()
        return XPoly(self._coeffs[-k:])

    def map(self, fn: Callable[[Scalar], Scalar]) -> XPoly:
        return XPoly(fn(c) for c in self._coeffs)

    def subs(self, p=None, q=None) -> XPoly:
        return self.map(lambda c: c.subs(p=p, q=q))

    def reciprocal(self, n: int) -> XPoly:
        """``x**n * f(1/x)``; requires ``deg f <= n``."""
        if self.degree > n:
            raise ValueError("degree exceeds reciprocal order")
        return XPoly(self.coeff(n - k) for k in range(n + 1))

    def __eq__(self, other) -> bool:
        if not isinstance(other, XPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"XPoly([{', '.join(repr(str(c)) for c in self._coeffs)}])"

    def __str__(self) -> str:
        if not self:
            return "0"
        parts = []
        for k, c in enumerate(self._coeffs):
            if not c:
                continue
            xs = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            parts.append(f"({c}) {xs}".strip() if xs else f"({c})")
        return " + ".join(parts)

    def to_json(self) -> dict:
        """``{"n": degree, "coeffs": [...]}``; the zero polynomial has ``n == -1``."""
        return {"n": self.degree, "coeffs": [c.to_json() for c in self._coeffs]}

    @classmethod
    def from_json(cls, data: Mapping) -> XPoly:
        poly = cls(Scalar.from_json(c) for c in data["coeffs"])
        if poly.degree != data["n"]:
            raise ValueError("XPoly JSON degree does not match its coefficients")
        return poly


X = XPoly([ZERO, ONE])
