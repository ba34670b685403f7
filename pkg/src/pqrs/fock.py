"""Truncated matrix representations of the deformed oscillator algebras.

Matrices act on column vectors: entry ``(r, c)`` is the coefficient of
``e_r`` in the image of ``e_c``.  The basis is the unnormalized ``H_n``
basis, where ``A_- e_n = [n] e_(n-1)`` and ``A_+ e_n = e_(n+1)``; every
relation checked here is invariant under the diagonal change of basis to
the normalized states, so nothing is lost by avoiding square roots.

Truncation at ``nmax`` breaks ``A_+`` on the top state.  Each relation is
therefore only asserted on its *interior*: the input states (columns) for
which no operator in the relation is applied to the top state.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction

from pqrs.errors import DimensionMismatch, TruncationTooSmall
from pqrs.pqcore import pq_number, pq_number_laurent, q_number_laurent
from pqrs.reports import AlgebraReport
from pqrs.scalar import ONE, ZERO, P, Q, Scalar, ScalarLike, _coerce, as_rational

Entry = tuple[int, int]


class FockMatrix:
    """Immutable square matrix of Scalars over a one- or two-mode truncated basis.

    Storage keeps only nonzero entries; :attr:`entries` gives the dense view.
    Two-mode index of ``e_n1 (x) e_n2`` is ``n1 * (nmax + 1) + n2``.
    """

    __slots__ = ("nmax", "modes", "dim", "_nz")

    def __init__(self, nmax: int, modes: int = 1, nonzero: dict[Entry, Scalar] | None = None):
        if modes not in (1, 2):
            raise ValueError("modes must be 1 or 2")
        self.nmax = nmax
        self.modes = modes
        self.dim = (nmax + 1) ** modes
        self._nz: dict[Entry, Scalar] = {k: v for k, v in (nonzero or {}).items() if v}

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence[ScalarLike]], nmax: int, modes: int = 1) -> FockMatrix:
        m = cls(nmax, modes)
        if len(entries) != m.dim or any(len(row) != m.dim for row in entries):
            raise DimensionMismatch(f"expected a {m.dim}x{m.dim} array")
        return cls(nmax, modes, {(r, c): _coerce(v) for r, row in enumerate(entries) for c, v in enumerate(row)})

    @classmethod
    def diag(cls, values: Iterable[ScalarLike], nmax: int, modes: int = 1) -> FockMatrix:
        return cls(nmax, modes, {(i, i): _coerce(v) for i, v in enumerate(values)})

    @classmethod
    def identity(cls, nmax: int, modes: int = 1) -> FockMatrix:
        return cls.diag([ONE] * (nmax + 1) ** modes, nmax, modes)

    @property
    def entries(self) -> tuple[tuple[Scalar, ...], ...]:
        return tuple(tuple(self[r, c] for c in range(self.dim)) for r in range(self.dim))

    @property
    def nonzero(self) -> dict[Entry, Scalar]:
        return dict(self._nz)

    def __getitem__(self, rc: Entry) -> Scalar:
        return self._nz.get(rc, ZERO)

    def diagonal(self) -> tuple[Scalar, ...]:
        return tuple(self[i, i] for i in range(self.dim))

    def is_diagonal(self) -> bool:
        return all(r == c for r, c in self._nz)

    def _same_space(self, other: FockMatrix) -> None:
        if (self.nmax, self.modes) != (other.nmax, other.modes):
            raise DimensionMismatch(
                f"{self.dim}x{self.dim} ({self.modes} mode) vs {other.dim}x{other.dim} ({other.modes} mode)"
            )

    def __add__(self, other: FockMatrix) -> FockMatrix:
        self._same_space(other)
        acc = dict(self._nz)
        for k, v in other._nz.items():
            acc[k] = acc.get(k, ZERO) + v
        return FockMatrix(self.nmax, self.modes, acc)

    def __neg__(self) -> FockMatrix:
        return FockMatrix(self.nmax, self.modes, {k: -v for k, v in self._nz.items()})

    def __sub__(self, other: FockMatrix) -> FockMatrix:
        return self + (-other)

    def __mul__(self, s: ScalarLike) -> FockMatrix:
        s = _coerce(s)
        if s is NotImplemented:
            return NotImplemented
        return FockMatrix(self.nmax, self.modes, {k: v * s for k, v in self._nz.items()})

    __rmul__ = __mul__

    def __matmul__(self, other: FockMatrix) -> FockMatrix:
        self._same_space(other)
        rows: dict[int, list[tuple[int, Scalar]]] = {}
        for (k, j), b in other._nz.items():
            rows.setdefault(k, []).append((j, b))
        acc: dict[Entry, Scalar] = {}
        for (i, k), a in self._nz.items():
            for j, b in rows.get(k, ()):
                acc[(i, j)] = acc.get((i, j), ZERO) + a * b
        return FockMatrix(self.nmax, self.modes, acc)

    def subs(self, p=None, q=None) -> FockMatrix:
        return FockMatrix(self.nmax, self.modes, {k: v.subs(p=p, q=q) for k, v in self._nz.items()})

    def on_mode(self, mode: int) -> FockMatrix:
        """Lift a one-mode matrix to the two-mode tensor basis acting on ``mode`` (1 or 2)."""
        if self.modes != 1:
            raise ValueError("only one-mode matrices can be lifted")
        size = self.nmax + 1
        acc: dict[Entry, Scalar] = {}
        for (r, c), v in self._nz.items():
            for other in range(size):
                if mode == 1:
                    acc[(r * size + other, c * size + other)] = v
                else:
                    acc[(other * size + r, other * size + c)] = v
        return FockMatrix(self.nmax, 2, acc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FockMatrix):
            return NotImplemented
        return (self.nmax, self.modes, self._nz) == (other.nmax, other.modes, other._nz)

    def __repr__(self) -> str:
        return f"FockMatrix(nmax={self.nmax}, modes={self.modes}, nonzero={len(self._nz)})"


def commutator(a: FockMatrix, b: FockMatrix) -> FockMatrix:
    """``AB - BA``."""
    return a @ b - b @ a


def _param(symbol: Scalar, value) -> Scalar:
    return symbol if value is None else Scalar.const(as_rational(value))


def build_ladder(nmax: int, p=None, q=None) -> tuple[FockMatrix, FockMatrix]:
    """``(A_minus, A_plus)`` with ``A_- e_n = [n]_{p,q} e_(n-1)`` and ``A_+ e_n = e_(n+1)``.

    ``p`` / ``q`` fix the deformation parameters to rationals; ``p=1`` gives
    the q-oscillator and ``p=q=1`` the undeformed one.
    """
    if nmax < 2:
        raise TruncationTooSmall("ladder matrices need nmax >= 2")
    lower = {(n - 1, n): pq_number(n).subs(p=p, q=q) for n in range(1, nmax + 1)}
    upper = {(n + 1, n): ONE for n in range(nmax)}
    return FockMatrix(nmax, 1, lower), FockMatrix(nmax, 1, upper)


def number_operator(nmax: int) -> FockMatrix:
    return FockMatrix.diag(range(nmax + 1), nmax)


def build_diag_power(base, nmax: int) -> FockMatrix:
    """``diag(base^0, base^1, ..., base^nmax)``; ``base`` may carry half exponents."""
    base = base if isinstance(base, Scalar) else Scalar.const(as_rational(base))
    return FockMatrix.diag((base**n for n in range(nmax + 1)), nmax)


def interior_states(nmax: int, modes: int) -> list[int]:
    """Basis indices with every mode occupation strictly below ``nmax``."""
    size = nmax + 1
    if modes == 1:
        return list(range(nmax))
    return [n1 * size + n2 for n1 in range(nmax) for n2 in range(nmax)]


def residual_report(relation: str, residual: FockMatrix, columns: Sequence[int] | None = None) -> AlgebraReport:
    """Summarize ``residual`` over the given columns (all columns when ``None``).

    The reported worst entry is the nonzero residual with the most terms,
    first in (column, row) order among ties.
    """
    allowed = None if columns is None else set(columns)
    worst = ZERO
    for (r, c), v in sorted(residual.nonzero.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        if allowed is not None and c not in allowed:
            continue
        if len(v) > len(worst):
            worst = v
    interior = residual.dim if columns is None else len(columns)
    return AlgebraReport(relation, interior, worst)


def _label(p, q) -> str:
    if p is None and q is None:
        return "pqo"
    if p is not None and as_rational(p) == 1 and q is None:
        return "qo"
    if p is not None and q is not None and as_rational(p) == 1 and as_rational(q) == 1:
        return "ho"
    return f"pqo[p={p},q={q}]"


def check_pq_oscillator(nmax: int, p=None, q=None) -> list[AlgebraReport]:
    """Defining relations of the (p,q)-oscillator on the interior ``n < nmax``.

    Checks ``[N, A_+] = A_+``, ``[N, A_-] = -A_-``,
    ``A_- A_+ - q A_+ A_- = p^N``, ``A_- A_+ - p A_+ A_- = q^N`` and the
    diagonal forms ``A_+ A_- = [N]``, ``A_- A_+ = [N + 1]``.
    """
    if nmax < 3:
        raise TruncationTooSmall("oscillator checks need nmax >= 3")
    am, ap = build_ladder(nmax, p, q)
    num = number_operator(nmax)
    ps, qs = _param(P, p), _param(Q, q)
    up_down, down_up = ap @ am, am @ ap
    bracket = FockMatrix.diag((pq_number(n).subs(p=p, q=q) for n in range(nmax + 1)), nmax)
    bracket1 = FockMatrix.diag((pq_number(n + 1).subs(p=p, q=q) for n in range(nmax + 1)), nmax)
    cols = interior_states(nmax, 1)
    tag = _label(p, q)
    return [
        residual_report(f"{tag}: [N,A+] = A+", commutator(num, ap) - ap, cols),
        residual_report(f"{tag}: [N,A-] = -A-", commutator(num, am) + am, cols),
        residual_report(f"{tag}: A-A+ - q A+A- = p^N", down_up - up_down * qs - build_diag_power(ps, nmax), cols),
        residual_report(f"{tag}: A-A+ - p A+A- = q^N", down_up - up_down * ps - build_diag_power(qs, nmax), cols),
        residual_report(f"{tag}: A+A- = [N]", up_down - bracket, cols),
        residual_report(f"{tag}: A-A+ = [N+1]", down_up - bracket1, cols),
    ]


def _two_modes(nmax: int, p=None, q=None):
    am, ap = build_ladder(nmax, p, q)
    num = number_operator(nmax)
    return (
        (am.on_mode(1), ap.on_mode(1), num.on_mode(1)),
        (am.on_mode(2), ap.on_mode(2), num.on_mode(2)),
    )


def _modes_commute(tag: str, mode1, mode2) -> AlgebraReport:
    """Every mode-1 generator commutes with every mode-2 generator, on the full basis."""
    worst = ZERO
    for g1 in mode1:
        for g2 in mode2:
            found = residual_report("", commutator(g1, g2)).worst_residual
            if len(found) > len(worst):
                worst = found
    return AlgebraReport(f"{tag}: mode 1 and mode 2 generators commute", mode1[0].dim, worst)


def check_js_sl2(nmax: int) -> list[AlgebraReport]:
    """Jordan-Schwinger ``sl(2)`` from two undeformed oscillators.

    ``x_+ = a1+ a2-``, ``x_- = a2+ a1-``, ``x_0 = (n1 - n2)/2``.  With these
    generators the bracket closes as ``[x_+, x_-] = 2 x_0`` (equivalently
    ``[x_-, x_+] = -2 x_0``), the ``q -> 1`` limit of the ``U_q(sl(2))``
    relation checked by :func:`check_js_uq_sl2`.
    """
    if nmax < 3:
        raise TruncationTooSmall("Jordan-Schwinger checks need nmax >= 3")
    mode1, mode2 = _two_modes(nmax, 1, 1)
    am1, ap1, n1 = mode1
    am2, ap2, n2 = mode2
    xp = ap1 @ am2
    xm = ap2 @ am1
    x0 = (n1 - n2) * Fraction(1, 2)
    cols = interior_states(nmax, 2)
    return [
        residual_report("sl2: [x0,x+] = x+", commutator(x0, xp) - xp, cols),
        residual_report("sl2: [x0,x-] = -x-", commutator(x0, xm) + xm, cols),
        residual_report("sl2: [x+,x-] = 2 x0", commutator(xp, xm) - x0 * 2, cols),
        _modes_commute("sl2", mode1, mode2),
    ]


def js_uq_sl2_generators(nmax: int) -> tuple[FockMatrix, FockMatrix, FockMatrix]:
    """``(X_+, X_-, X_0)`` built from two q-oscillators with ``q^(-N2/2)`` inserted."""
    mode1, mode2 = _two_modes(nmax, p=1)
    am1, ap1, n1 = mode1
    am2, ap2, n2 = mode2
    half = build_diag_power(Scalar.monomial(1, q=Fraction(-1, 2)), nmax).on_mode(2)
    xp = ap1 @ half @ am2
    xm = ap2 @ half @ am1
    x0 = (n1 - n2) * Fraction(1, 2)
    return xp, xm, x0


def check_js_uq_sl2(nmax: int) -> list[AlgebraReport]:
    """Jordan-Schwinger realization of ``U_q(sl(2))``.

    Verifies ``[X_0, X_+-] = +-X_+-`` and
    ``X_+ X_- - q^-1 X_- X_+ = [2 X_0]_q = (1 - q^(2 X_0))/(1 - q)``, the
    right side being diagonal with Laurent q-numbers ``[n1 - n2]_q``.
    """
    if nmax < 3:
        raise TruncationTooSmall("Jordan-Schwinger checks need nmax >= 3")
    xp, xm, x0 = js_uq_sl2_generators(nmax)
    size = nmax + 1
    two_x0 = FockMatrix.diag((q_number_laurent(i // size - i % size) for i in range(size * size)), nmax, 2)
    mode1, mode2 = _two_modes(nmax, p=1)
    cols = interior_states(nmax, 2)
    return [
        residual_report("uqsl2: [X0,X+] = X+", commutator(x0, xp) - xp, cols),
        residual_report("uqsl2: [X0,X-] = -X-", commutator(x0, xm) + xm, cols),
        residual_report("uqsl2: X+X- - q^-1 X-X+ = [2X0]_q", xp @ xm - (xm @ xp) * Q**-1 - two_x0, cols),
        _modes_commute("uqsl2", mode1, mode2),
    ]


def check_ugl2_relations(
    x0: FockMatrix, x_plus: FockMatrix, x_minus: FockMatrix, columns: Sequence[int] | None = None
) -> list[AlgebraReport]:
    """Relations of ``U_{p,q}(gl(2))`` for a caller-supplied realization.

    ``[X_0, X_+-] = +-X_+-`` and ``X_+ X_- - (pq)^-1 X_- X_+ = [2 X_0]_{p,q}``.
    ``x0`` must be diagonal with rational entries whose doubles are integers.
    No realization is built in.
    """
    if not x0.is_diagonal():
        raise ValueError("X_0 must be diagonal")
    twice = []
    for v in x0.diagonal():
        m = 2 * v.constant_value()
        if m.denominator != 1:
            raise ValueError("X_0 eigenvalues must be half-integers")
        twice.append(pq_number_laurent(int(m)))
    rhs = FockMatrix.diag(twice, x0.nmax, x0.modes)
    return [
        residual_report("uglpq: [X0,X+] = X+", commutator(x0, x_plus) - x_plus, columns),
        residual_report("uglpq: [X0,X-] = -X-", commutator(x0, x_minus) + x_minus, columns),
        residual_report(
            "uglpq: X+X- - (pq)^-1 X-X+ = [2X0]_pq",
            x_plus @ x_minus - (x_minus @ x_plus) * (P * Q) ** -1 - rhs,
            columns,
        ),
    ]
