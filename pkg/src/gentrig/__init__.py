"""Generalized (p,q)-trigonometric functions.

The forward functions are hypergeometric, the inverses are found by a
bracketed Newton iteration, and a tanh-sinh quadrature of the defining
integrals serves as an independent check.
"""

from .bounds import (
    Envelope,
    GammaBound,
    alpha,
    arcsin_envelope,
    arsinh_envelope,
    carlson_envelope,
    gamma_bound,
    pi_conj_envelope,
    pi_dual_envelope,
    pi_pq_envelope,
)
from .errors import (
    BracketInvalid,
    ConvergenceError,
    DomainError,
    DomainViolation,
    MaxIterExceeded,
    NoConvergence,
    NonConvergent,
    UnknownPredicate,
)
from .inversion import RootConfig, cos_pq, invert_monotone, sin_pq, sin_pq_deriv, sinh_pq
from .pqtrig import (
    PqConstants,
    PqParams,
    arccos_pq,
    arcsin_pq,
    arcsin_tail,
    arsinh_pq,
    m_pq,
    pi_pq,
    pq_constants,
)
from .quad_oracle import arcsin_quad, arsinh_quad, integrate_de
from .special_fn import EvalResult, HypTriple, beta, gauss_2f1, ln_gamma

__version__ = "0.1.0"
