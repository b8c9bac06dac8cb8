"""Exact and floating-point evaluation of the PAC-Bayes normalizers xi(m)
and xi2(m), their integer rescalings gamma and gamma2, and the Abel and
Hurwitz sums behind their closed forms."""

from .abel_hurwitz import (
    abel_sum,
    alpha,
    compositions,
    hurwitz_sum,
    riordan_binomial_rhs,
    riordan_multinomial_rhs,
)
from .errors import DomainError, ResourceError, SingularTermError
from .exact_core import (
    VerifyReport,
    gamma2_defn,
    gamma2_simplified,
    gamma_defn,
    gamma_simplified,
    telescope_sum,
    verify_identity,
    xi2_exact,
    xi_exact,
)
from .float_eval import (
    SeriesEval,
    identity_residual,
    xi2_float,
    xi_float,
    xi_float_naive,
)

__all__ = [
    "DomainError",
    "ResourceError",
    "SeriesEval",
    "SingularTermError",
    "VerifyReport",
    "abel_sum",
    "alpha",
    "compositions",
    "gamma2_defn",
    "gamma2_simplified",
    "gamma_defn",
    "gamma_simplified",
    "hurwitz_sum",
    "identity_residual",
    "riordan_binomial_rhs",
    "riordan_multinomial_rhs",
    "telescope_sum",
    "verify_identity",
    "xi2_exact",
    "xi2_float",
    "xi_exact",
    "xi_float",
    "xi_float_naive",
]
