from fractions import Fraction

import pytest
import sympy
from hypothesis import strategies as st

from pqrs.scalar import Scalar
from pqrs.xpoly import XPoly

sp_p, sp_q, sp_t, sp_x = sympy.symbols("p q t x")

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=9)
nonzero_rationals = rationals.filter(bool)


@st.composite
def scalars(draw, max_terms=5, half=True, lo=-4, hi=4):
    exps = st.integers(lo, hi) if half else st.integers(lo // 2, hi // 2).map(lambda e: 2 * e)
    n = draw(st.integers(0, max_terms))
    terms = [((draw(exps), draw(exps)), draw(rationals)) for _ in range(n)]
    return Scalar(terms)


@st.composite
def xpolys(draw, max_degree=8, max_terms=3):
    deg = draw(st.integers(0, max_degree))
    return XPoly(draw(scalars(max_terms=max_terms, half=False)) for _ in range(deg + 1))


def to_sympy(s: Scalar):
    """Independent rendering of a Scalar as a sympy expression."""
    return sum(
        (sympy.Rational(c.numerator, c.denominator) * sp_p ** sympy.Rational(i, 2) * sp_q ** sympy.Rational(j, 2)
         for (i, j), c in s.terms),
        sympy.Integer(0),
    )


def from_sympy(expr) -> Scalar:
    """Parse an expanded sympy Laurent polynomial in p, q (integer powers) into a Scalar."""
    expr = sympy.expand(expr)
    terms = []
    for term in sympy.Add.make_args(expr):
        if term == 0:
            continue
        coeff, rest = term.as_coeff_Mul()
        powers = rest.as_powers_dict() if rest != 1 else {}
        i = powers.get(sp_p, 0)
        j = powers.get(sp_q, 0)
        extra = set(powers) - {sp_p, sp_q}
        assert not extra, extra
        terms.append(((int(2 * i), int(2 * j)), Fraction(int(coeff.p), int(coeff.q))))
    return Scalar(terms)


@pytest.fixture
def acceptance_log(request):
    lines = request.config.stash.setdefault(_ACCEPTANCE_KEY, [])
    return lines.append


_ACCEPTANCE_KEY = pytest.StashKey[list]()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
