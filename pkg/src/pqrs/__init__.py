"""Exact (p,q)-calculus: (p,q)-numbers and binomials, Rogers-Szegő polynomial
families, difference and ladder operators, and truncated Fock-space checks of
the deformed oscillator algebras."""

from pqrs.errors import (
    DimensionMismatch,
    HalfPowerOfNonSquare,
    ImaginaryResidueTooLarge,
    NotDivisible,
    PreconditionViolated,
    TruncationTooSmall,
    ZeroBaseNegativeExponent,
)
from pqrs.fock import (
    FockMatrix,
    build_diag_power,
    build_ladder,
    check_js_sl2,
    check_js_uq_sl2,
    check_pq_oscillator,
    check_ugl2_relations,
    commutator,
)
from pqrs.ops import (
    check_diffeq,
    check_ladder_suite,
    check_qid,
    check_recurrence_pqro,
    d_pq,
    d_q,
    eta,
    raise_pq,
)
from pqrs.poly import (
    NormalizedState,
    check_no_rescaling,
    eval_exact,
    hermite_eval,
    pq_rs_poly,
    rs_poly,
    special_rs_qinv_q,
    sw_poly,
)
from pqrs.pqcore import (
    UniPoly,
    check_binomial_p_power_identity,
    check_shifted_factorial_reduction,
    pq_binomial,
    pq_binomial_pascal,
    pq_factorial,
    pq_number,
    pq_shifted_factorial,
    q_binomial_uni,
)
from pqrs.reports import AlgebraReport, LinOpReport, RescalingReport
from pqrs.scalar import ONE, ZERO, P, Q, Rational, Scalar
from pqrs.xpoly import X, XPoly

__version__ = "0.1.0"
