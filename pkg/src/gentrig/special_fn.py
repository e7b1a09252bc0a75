"""Real-argument gamma, beta and Gauss hypergeometric functions.

Only positive gamma arguments are supported.  The hypergeometric evaluator
works on the real half-line ``x <= 1`` and picks a route by argument:

* ``|x| < X_SWITCH``, ``x >= 0``: the defining power series;
* ``x < 0``: Pfaff's transformation onto ``[0, 1)``;
* ``X_SWITCH <= x < 1``: Euler's transformation, then an Euler-integral
  quadrature when the series blows its term budget;
* ``x == 1``: Gauss's closed-form sum.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError, NonConvergent

__all__ = [
    "HypTriple",
    "EvalResult",
    "Method",
    "ln_gamma",
    "gamma",
    "beta",
    "hyp2f1_series",
    "gauss_2f1",
    "X_SWITCH",
    "SERIES_RTOL",
    "MAX_TERMS",
]

X_SWITCH = 0.95
SERIES_RTOL = 1e-15
MAX_TERMS = 10_000

# Lanczos approximation, g = 7, n = 9.
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)


def _require_finite(*values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise DomainError(f"non-finite input {v!r}")


def ln_gamma(x: float) -> float:
    """Natural log of the gamma function for ``x > 0``."""
    _require_finite(x)
    if x <= 0.0:
        raise DomainError(f"ln_gamma requires x > 0, got {x!r}")
    if x < 0.5:
        # shift up with the recurrence; the Lanczos sum is tuned for x >= 1/2
        return ln_gamma(x + 1.0) - math.log(x)
    z = x - 1.0
    acc = _LANCZOS_COEF[0]
    for i in range(1, len(_LANCZOS_COEF)):
        acc += _LANCZOS_COEF[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (z + 0.5) * math.log(t) - t + math.log(acc)


def gamma(x: float) -> float:
    """Gamma function for ``x > 0``."""
    return math.exp(ln_gamma(x))


def beta(x: float, y: float) -> float:
    """Euler beta function ``B(x, y)`` for positive arguments.

    Evaluated in log space so large arguments do not overflow.
    """
    _require_finite(x, y)
    if x <= 0.0 or y <= 0.0:
        raise DomainError(f"beta requires positive arguments, got ({x!r}, {y!r})")
    return math.exp(ln_gamma(x) + ln_gamma(y) - ln_gamma(x + y))


def _is_nonpositive_integer(v: float) -> bool:
    return v <= 0.0 and v == math.floor(v)


@dataclass(frozen=True)
class HypTriple:
    """Parameters ``(a, b, c)`` of ``2F1(a, b; c; x)``."""

    a: float
    b: float
    c: float

    def __post_init__(self) -> None:
        _require_finite(self.a, self.b, self.c)
        if _is_nonpositive_integer(self.c):
            raise DomainError(f"c must not be zero or a negative integer, got {self.c!r}")

    @property
    def gauss_summable(self) -> bool:
        """True when the series converges at ``x = 1`` (``c - a - b > 0``)."""
        return self.c - self.a - self.b > 0.0


class Method(str, enum.Enum):
    DIRECT_SERIES = "DirectSeries"
    PFAFF_SERIES = "PfaffSeries"
    ENDPOINT_GAUSS = "EndpointGauss"
    QUADRATURE = "Quadrature"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class EvalResult:
    value: float
    abs_err_est: float
    method: Method


def hyp2f1_series(
    a: float,
    b: float,
    c: float,
    x: float,
    rtol: float = SERIES_RTOL,
    max_terms: int = MAX_TERMS,
) -> tuple[float, float]:
    """Sum the defining power series of ``2F1``.

    Returns ``(value, first_neglected_term)``.  Stops once a term falls below
    ``rtol`` relative to the partial sum while the term ratio is already
    contracting, so growing leading terms do not trigger an early exit.

    Raises
    ------
    NonConvergent
        If ``max_terms`` terms do not meet the tolerance.
    """
    term = 1.0
    total = 1.0
    for n in range(max_terms):
        ratio = (a + n) * (b + n) / ((c + n) * (n + 1.0)) * x
        term *= ratio
        total += term
        if term == 0.0:
            return total, 0.0
        nxt = abs((a + n + 1) * (b + n + 1) / ((c + n + 1) * (n + 2.0)) * x)
        if abs(term) <= rtol * abs(total) and nxt < 1.0:
            return total, abs(term) * nxt
    raise NonConvergent(
        f"2F1({a}, {b}; {c}; {x}) series needs more than {max_terms} terms"
    )


def _gauss_sum(t: HypTriple) -> float:
    c, a, b = t.c, t.a, t.b
    args = (c, c - a - b, c - a, c - b)
    if min(args) <= 0.0:
        raise DomainError(f"Gauss sum needs positive gamma arguments for {t}")
    return math.exp(
        ln_gamma(c) + ln_gamma(c - a - b) - ln_gamma(c - a) - ln_gamma(c - b)
    )


def gauss_2f1(params: HypTriple, x: float, *, xc: float | None = None) -> EvalResult:
    """Evaluate ``2F1(a, b; c; x)`` for real ``x <= 1``.

    Parameters
    ----------
    params : HypTriple
    x : float
        Argument, ``x <= 1``.
    xc : float, optional
        ``1 - x`` supplied by a caller who knows it more accurately than the
        subtraction would give (arguments of the form ``t/(1+t)`` with large
        ``t``).  Used in the prefactors and the integral fallback.
    """
    _require_finite(x)
    if x > 1.0:
        raise DomainError(f"2F1 is evaluated for x <= 1 only, got {x!r}")
    if xc is None:
        xc = 1.0 - x
    a, b, c = params.a, params.b, params.c

    if x == 1.0 or xc == 0.0:
        if not params.gauss_summable:
            raise DomainError(f"2F1 diverges at x=1 for {params} (c-a-b <= 0)")
        return EvalResult(_gauss_sum(params), 0.0, Method.ENDPOINT_GAUSS)

    if x < 0.0:
        z = -x / xc
        inner = gauss_2f1(HypTriple(b, c - a, c), z, xc=1.0 / xc)
        pref = xc ** (-b)
        method = Method.QUADRATURE if inner.method is Method.QUADRATURE else Method.PFAFF_SERIES
        return EvalResult(pref * inner.value, pref * inner.abs_err_est, method)

    if x < X_SWITCH:
        value, err = hyp2f1_series(a, b, c, x)
        return EvalResult(value, err, Method.DIRECT_SERIES)

    pref = xc ** (c - a - b)
    try:
        value, err = hyp2f1_series(c - a, c - b, c, x)
        return EvalResult(pref * value, pref * err, Method.DIRECT_SERIES)
    except NonConvergent:
        pass

    from .quad_oracle import hyp2f1_euler_integral

    res = hyp2f1_euler_integral(a, b, c, x, xc)
    return EvalResult(res.value, res.abs_err_est, Method.QUADRATURE)
