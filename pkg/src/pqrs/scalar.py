"""Exact coefficient arithmetic.

A :class:`Scalar` is a Laurent polynomial in ``p**(1/2)`` and ``q**(1/2)``
with rational coefficients.  Exponents are stored in *half units*: the term
``c * p**(i/2) * q**(j/2)`` is kept under the key ``(i, j)``.  Integer powers
of ``p`` and ``q`` therefore have even keys, and ``q**(-1/2)`` is ``(0, -1)``.

Values are immutable and always held in canonical form (no zero
coefficients, terms sorted lexicographically by exponent pair), so equality
is structural and an identity holds exactly when its difference is ``ZERO``.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction
from math import isqrt
from typing import Union

from pqrs.errors import HalfPowerOfNonSquare, NotDivisible, ZeroBaseNegativeExponent

Rational = Fraction

Key = tuple[int, int]
ScalarLike = Union["Scalar", int, Fraction]


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"a/b"`` string to a Fraction; floats are rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def rational_sqrt(value: Fraction) -> Fraction:
    """Exact square root of a nonnegative rational square."""
    value = as_rational(value)
    if value < 0:
        raise HalfPowerOfNonSquare(f"{value} has no real square root")
    num, den = value.numerator, value.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        raise HalfPowerOfNonSquare(f"{value} is not the square of a rational")
    return Fraction(rn, rd)


def rational_power(base: Fraction, half_units: int) -> Fraction:
    """``base ** (half_units / 2)`` computed exactly."""
    if half_units == 0:
        return Fraction(1)
    if base == 0:
        if half_units < 0:
            raise ZeroBaseNegativeExponent("zero raised to a negative power")
        return Fraction(0)
    if half_units % 2 == 0:
        return base ** (half_units // 2)
    return rational_sqrt(base) ** half_units


def _half_units(exponent) -> int:
    twice = Fraction(exponent) * 2
    if twice.denominator != 1:
        raise ValueError(f"exponent {exponent} is not a multiple of 1/2")
    return int(twice)


class Scalar:
    """Immutable sparse Laurent polynomial in ``p**(1/2)``, ``q**(1/2)`` over Q.

    Supports ``+``, ``-``, ``*``, integer ``**`` and exact ``/``.  Ints and
    Fractions are promoted to constant Scalars on either side of an operator.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Key, object] | Iterable[tuple[Key, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Key, Fraction] = {}
        for (i, j), c in items:
            key = (int(i), int(j))
            acc[key] = acc.get(key, 0) + as_rational(c)
        self._set(acc)

    def _set(self, acc: dict[Key, Fraction]) -> None:
        self._terms: tuple[tuple[Key, Fraction], ...] = tuple(
            sorted((k, v) for k, v in acc.items() if v)
        )
        self._hash: int | None = None

    @classmethod
    def _raw(cls, acc: dict[Key, Fraction]) -> Scalar:
        # trusted constructor: keys are int pairs, values Fractions (zeros allowed)
        obj = cls.__new__(cls)
        obj._set(acc)
        return obj

    @classmethod
    def monomial(cls, coeff=1, p=0, q=0) -> Scalar:
        """``coeff * p**p * q**q``; exponents may be integers or halves."""
        return cls._raw({(_half_units(p), _half_units(q)): as_rational(coeff)})

    @classmethod
    def const(cls, value) -> Scalar:
        return cls._raw({(0, 0): as_rational(value)})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> tuple[tuple[Key, Fraction], ...]:
        """Canonical ``((i, j), coeff)`` pairs in half units, sorted by ``(i, j)``."""
        return self._terms

    def as_dict(self) -> dict[Key, Fraction]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    @property
    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and self._terms[0][0] == (0, 0))

    @property
    def is_integral(self) -> bool:
        """True when every exponent is a whole power of p and q."""
        return all(i % 2 == 0 and j % 2 == 0 for (i, j), _ in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"{self} is not a constant")
        return self._terms[0][1] if self._terms else Fraction(0)

    def total_degrees(self) -> set[Fraction]:
        """Set of total degrees ``(i + j) / 2`` occurring in the terms."""
        return {Fraction(i + j, 2) for (i, j), _ in self._terms}

    # -- ring operations --------------------------------------------------

    def __add__(self, other: ScalarLike) -> Scalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for k, v in other._terms:
            acc[k] = acc.get(k, 0) + v
        return Scalar._raw(acc)

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar._raw({k: -v for k, v in self._terms})

    def __sub__(self, other: ScalarLike) -> Scalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for k, v in other._terms:
            acc[k] = acc.get(k, 0) - v
        return Scalar._raw(acc)

    def __rsub__(self, other: ScalarLike) -> Scalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other: ScalarLike) -> Scalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict[Key, Fraction] = {}
        for (i1, j1), c1 in self._terms:
            for (i2, j2), c2 in other._terms:
                key = (i1 + i2, j1 + j2)
                acc[key] = acc.get(key, 0) + c1 * c2
        return Scalar._raw(acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Scalar:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            if not self.is_monomial:
                raise NotDivisible(f"negative power of non-monomial {self}")
            (i, j), c = self._terms[0]
            return Scalar._raw({(i * exponent, j * exponent): c**exponent})
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def div_exact(self, other: ScalarLike) -> Scalar:
        """Return ``c`` with ``c * other == self``.

        Division by a monomial always succeeds.  Otherwise both operands are
        shifted into the ordinary polynomial ring (the divisor with no
        monomial factor left) and divided by lex leading terms; any leftover
        or a leading monomial that does not divide raises ``NotDivisible``.
        """
        other = _coerce(other)
        if other is NotImplemented:
            raise TypeError("cannot divide by a non-scalar")
        if not other:
            raise ZeroDivisionError("division by the zero Scalar")
        if not self:
            return ZERO
        if other.is_monomial:
            (a, b), c = other._terms[0]
            return Scalar._raw({(i - a, j - b): v / c for (i, j), v in self._terms})

        di0 = min(i for (i, _), _ in other._terms)
        dj0 = min(j for (_, j), _ in other._terms)
        ni0 = min(i for (i, _), _ in self._terms)
        nj0 = min(j for (_, j), _ in self._terms)
        divisor = {(i - di0, j - dj0): c for (i, j), c in other._terms}
        rem = {(i - ni0, j - nj0): c for (i, j), c in self._terms}
        lead = max(divisor)
        lead_c = divisor[lead]
        quot: dict[Key, Fraction] = {}
        while rem:
            top = max(rem)
            si, sj = top[0] - lead[0], top[1] - lead[1]
            if si < 0 or sj < 0:
                raise NotDivisible(f"({self}) / ({other}) is not a Laurent polynomial")
            f = rem[top] / lead_c
            quot[(si, sj)] = f
            for (i, j), c in divisor.items():
                key = (i + si, j + sj)
                v = rem.get(key, 0) - f * c
                if v:
                    rem[key] = v
                else:
                    rem.pop(key, None)
        si, sj = ni0 - di0, nj0 - dj0
        return Scalar._raw({(i + si, j + sj): c for (i, j), c in quot.items()})

    def __truediv__(self, other: ScalarLike) -> Scalar:
        return self.div_exact(other)

    def __rtruediv__(self, other: ScalarLike) -> Scalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other.div_exact(self)

    # -- substitutions ----------------------------------------------------

    def swap_pq(self) -> Scalar:
        return Scalar._raw({(j, i): c for (i, j), c in self._terms})

    def invert_pq(self) -> Scalar:
        """Substitute ``p -> 1/p`` and ``q -> 1/q`` (negate all exponents)."""
        return Scalar._raw({(-i, -j): c for (i, j), c in self._terms})

    def subs(self, p=None, q=None) -> Scalar:
        """Substitute for ``p`` and/or ``q``.

        Each of ``p``, ``q`` may be ``None`` (left symbolic), an exact
        rational, or a monomial Scalar such as ``Q**-1``.
        """
        if p is None and q is None:
            return self
        acc: dict[Key, Fraction] = {}
        for (i, j), c in self._terms:
            cp, ip, jp = _power_image(p, i, (1, 0))
            cq, iq, jq = _power_image(q, j, (0, 1))
            key = (ip + iq, jp + jq)
            acc[key] = acc.get(key, 0) + c * cp * cq
        return Scalar._raw(acc)

    def substitute(self, p0, q0) -> Fraction:
        """Exact rational value at ``(p, q) = (p0, q0)``."""
        p0, q0 = as_rational(p0), as_rational(q0)
        total = Fraction(0)
        for (i, j), c in self._terms:
            total += c * rational_power(p0, i) * rational_power(q0, j)
        return total

    # -- comparison, hashing, display ------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __repr__(self) -> str:
        return f"Scalar({format_scalar(self)!r})"

    def __str__(self) -> str:
        return format_scalar(self)

    def to_json(self) -> dict:
        return {
            "terms": [
                {"p2": i, "q2": j, "num": str(c.numerator), "den": str(c.denominator)}
                for (i, j), c in self._terms
            ]
        }

    @classmethod
    def from_json(cls, data: Mapping) -> Scalar:
        terms = [
            ((t["p2"], t["q2"]), Fraction(int(t["num"]), int(t["den"]))) for t in data["terms"]
        ]
        keys = [k for k, _ in terms]
        if len(set(keys)) != len(keys):
            raise ValueError("duplicate exponent pair in Scalar JSON")
        return cls(terms)


def _coerce(value):
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Scalar._raw({(0, 0): Fraction(value)})
    return NotImplemented


def _power_image(image, half_units: int, unit: Key) -> tuple[Fraction, int, int]:
    """Image of ``var**(half_units/2)`` as ``(coeff, i, j)``."""
    if half_units == 0:
        return Fraction(1), 0, 0
    if image is None:
        return Fraction(1), unit[0] * half_units, unit[1] * half_units
    if isinstance(image, Scalar):
        if not image.is_monomial:
            raise ValueError("only monomial images can be substituted for p or q")
        (a, b), c = image.terms[0]
        if (a * half_units) % 2 or (b * half_units) % 2:
            raise HalfPowerOfNonSquare(f"({image})**({half_units}/2) leaves the half-unit lattice")
        return rational_power(c, half_units), a * half_units // 2, b * half_units // 2
    return rational_power(as_rational(image), half_units), 0, 0


ZERO = Scalar._raw({})
ONE = Scalar._raw({(0, 0): Fraction(1)})
P = Scalar._raw({(2, 0): Fraction(1)})
Q = Scalar._raw({(0, 2): Fraction(1)})


def _format_exponent(name: str, half_units: int) -> str:
    if half_units == 2:
        return name
    if half_units % 2 == 0:
        return f"{name}^{half_units // 2}"
    return f"{name}^({half_units}/2)"


def format_scalar(a: Scalar) -> str:
    """Canonical text rendering, e.g. ``"p^4 + p^3 q + 2 p^2 q^2 + p q^3 + q^4"``.

    Terms run in descending ``(p, q)`` exponent order; half exponents are
    written ``q^(-1/2)``.
    """
    if not a:
        return "0"
    parts: list[str] = []
    for (i, j), c in reversed(a.terms):
        factors = [_format_exponent(n, e) for n, e in (("p", i), ("q", j)) if e]
        mag = abs(c)
        if factors:
            body = " ".join(factors if mag == 1 else [str(mag), *factors])
        else:
            body = str(mag)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def scalar_arith(a: ScalarLike, b: ScalarLike, op: str) -> Scalar:
    """Ring operation ``op`` in ``{"add", "sub", "mul"}``."""
    a, b = _coerce(a), _coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def scalar_div_exact(a: ScalarLike, b: ScalarLike) -> Scalar:
    return _coerce(a).div_exact(b)


def scalar_substitute(a: Scalar, p0, q0) -> Fraction:
    return a.substitute(p0, q0)


def scalar_swap_pq(a: Scalar) -> Scalar:
    return a.swap_pq()
