"""Forward (p,q)-trigonometric functions and their constants.

``arcsin_pq(x) = int_0^x (1 - t^q)^(-1/p) dt = x F(1/p, 1/q; 1 + 1/q; x^q)``
and ``arsinh_pq`` is the same with ``1 + t^q``.  Everything is evaluated
through :func:`gentrig.special_fn.gauss_2f1`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError
from .special_fn import EvalResult, HypTriple, Method, beta, gauss_2f1

__all__ = [
    "PqParams",
    "PqConstants",
    "as_pq",
    "pq_constants",
    "pi_pq",
    "m_pq",
    "arcsin_pq",
    "arcsin_eval",
    "arccos_pq",
    "arccos_eval",
    "arsinh_pq",
    "arsinh_eval",
    "arcsin_tail",
]


@dataclass(frozen=True)
class PqParams:
    """Exponent pair with ``p, q > 1``."""

    p: float
    q: float

    def __post_init__(self) -> None:
        for name in ("p", "q"):
            v = getattr(self, name)
            if not isinstance(v, (int, float)) or not math.isfinite(v):
                raise DomainError(f"{name} must be a finite real, got {v!r}")
            if v <= 1.0:
                raise DomainError(f"{name} must exceed 1, got {v!r}")
        object.__setattr__(self, "p", float(self.p))
        object.__setattr__(self, "q", float(self.q))

    @property
    def p_conj(self) -> float:
        """Conjugate exponent ``p / (p - 1)``."""
        return self.p / (self.p - 1.0)


def as_pq(pq) -> PqParams:
    if isinstance(pq, PqParams):
        return pq
    p, q = pq
    return PqParams(p, q)


@dataclass(frozen=True)
class PqConstants:
    pi_half: float
    m: float
    lambda_star: float


@lru_cache(maxsize=512)
def _constants(p: float, q: float) -> PqConstants:
    pq = PqParams(p, q)
    pi_half = beta(1.0 - 1.0 / p, 1.0 / q) / q
    m = 2.0 ** (-1.0 / p) * gauss_2f1(_arsinh_triple(pq), 0.5).value
    return PqConstants(pi_half=pi_half, m=m, lambda_star=q * (p - 1.0) / p)


def pq_constants(pq) -> PqConstants:
    """Half-period, ``m_{p,q}`` and eigenvalue ``q(p-1)/p`` (cached)."""
    pq = as_pq(pq)
    return _constants(pq.p, pq.q)


def pi_pq(pq) -> float:
    """``pi_{p,q} = (2/q) B(1 - 1/p, 1/q)``."""
    return 2.0 * pq_constants(pq).pi_half


def m_pq(pq) -> float:
    """``m_{p,q} = 2^(-1/p) F(1, 1/p; 1 + 1/q; 1/2)``, equal to ``arsinh_pq(1)``."""
    return pq_constants(pq).m


def _arcsin_triple(pq: PqParams) -> HypTriple:
    return HypTriple(1.0 / pq.p, 1.0 / pq.q, 1.0 + 1.0 / pq.q)


def _arsinh_triple(pq: PqParams) -> HypTriple:
    return HypTriple(1.0, 1.0 / pq.p, 1.0 + 1.0 / pq.q)


def _check_unit(x: float, fn: str) -> None:
    if not (isinstance(x, (int, float)) and math.isfinite(x)) or not 0.0 <= x <= 1.0:
        raise DomainError(f"{fn} needs 0 <= x <= 1, got {x!r}")


def arcsin_eval(pq, x: float) -> EvalResult:
    pq = as_pq(pq)
    _check_unit(x, "arcsin_pq")
    if x == 0.0:
        return EvalResult(0.0, 0.0, Method.DIRECT_SERIES)
    # 1 - x^q, formed without cancellation for x near 1
    xq = x**pq.q
    xc = -math.expm1(pq.q * math.log(x))
    r = gauss_2f1(_arcsin_triple(pq), xq, xc=xc)
    return EvalResult(x * r.value, x * r.abs_err_est, r.method)


def arcsin_pq(pq, x: float) -> float:
    """``arcsin_{p,q}(x)`` for ``0 <= x <= 1``."""
    return arcsin_eval(pq, x).value


def arccos_eval(pq, x: float) -> EvalResult:
    pq = as_pq(pq)
    _check_unit(x, "arccos_pq")
    if x == 0.0:
        return arcsin_eval(pq, 1.0)
    return arcsin_eval(pq, (-math.expm1(pq.p * math.log(x))) ** (1.0 / pq.q))


def arccos_pq(pq, x: float) -> float:
    """``arccos_{p,q}(x) = arcsin_{p,q}((1 - x^p)^(1/q))``."""
    return arccos_eval(pq, x).value


def arsinh_eval(pq, x: float) -> EvalResult:
    pq = as_pq(pq)
    if not (isinstance(x, (int, float)) and math.isfinite(x)) or x < 0.0:
        raise DomainError(f"arsinh_pq needs finite x >= 0, got {x!r}")
    if x == 0.0:
        return EvalResult(0.0, 0.0, Method.PFAFF_SERIES)
    p, q = pq.p, pq.q
    xq = x**q
    # z = x^q/(1+x^q) and 1-z = 1/(1+x^q), both without cancellation
    z = 1.0 / (1.0 + 1.0 / xq) if xq > 1.0 else xq / (1.0 + xq)
    zc = 1.0 / (1.0 + xq)
    pref = x * zc ** (1.0 / p)
    r = gauss_2f1(_arsinh_triple(pq), z, xc=zc)
    method = Method.QUADRATURE if r.method is Method.QUADRATURE else Method.PFAFF_SERIES
    return EvalResult(pref * r.value, pref * r.abs_err_est, method)


def arsinh_pq(pq, x: float) -> float:
    """``arsinh_{p,q}(x)`` for ``x >= 0`` via the Pfaff-transformed series."""
    return arsinh_eval(pq, x).value


def arcsin_tail(pq, w: float) -> float:
    """Complementary integral ``pi_{p,q}/2 - arcsin_{p,q}((1 - w)^(1/q))``.

    Equals ``(1/q) B_w(1 - 1/p, 1/q)``, an incomplete beta function, and is
    accurate for small ``w`` where the forward function has lost digits to
    the representation of its argument near 1.
    """
    pq = as_pq(pq)
    _check_unit(w, "arcsin_tail")
    if w == 0.0:
        return 0.0
    alpha = 1.0 - 1.0 / pq.p
    if w == 1.0:
        return pq_constants(pq).pi_half
    f = gauss_2f1(HypTriple(alpha, 1.0 - 1.0 / pq.q, 1.0 + alpha), w).value
    return w**alpha / (pq.q * alpha) * f
