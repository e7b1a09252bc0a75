"""Closed-form lower/upper bounds for the (p,q)-functions and their ingredients.

All functions return raw bound values.  Deciding whether a bound holds, and
with what tolerance, is left to :mod:`gentrig.propcheck`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError
from .pqtrig import as_pq, pi_pq
from .special_fn import ln_gamma

__all__ = [
    "Envelope",
    "GammaBound",
    "arcsin_envelope",
    "arsinh_envelope",
    "alpha",
    "pi_pq_envelope",
    "pi_dual_envelope",
    "pi_conj_envelope",
    "carlson_envelope",
    "gamma_bound",
]

_SQRT_PI = math.sqrt(math.pi)


@dataclass(frozen=True)
class Envelope:
    """A pair of bounds; a missing side is ``-inf`` or ``+inf``."""

    lower: float
    upper: float

    def brackets(self, value: float) -> bool:
        return self.lower < value < self.upper


def _open_unit(x: float, fn: str) -> None:
    if not 0.0 < x < 1.0:
        raise DomainError(f"{fn} needs 0 < x < 1, got {x!r}")


def arcsin_envelope(pq, x: float) -> Envelope:
    pq = as_pq(pq)
    _open_unit(x, "arcsin_envelope")
    p, q = pq.p, pq.q
    xq = x**q
    lower = x * (1.0 + xq / (p * (1.0 + q)))
    upper = min(
        0.5 * pi_pq(pq) * x,
        x * math.exp(-math.log1p(-xq) / (p * (1.0 + q))),
    )
    return Envelope(lower, upper)


def arsinh_envelope(pq, x: float) -> Envelope:
    pq = as_pq(pq)
    _open_unit(x, "arsinh_envelope")
    p, q = pq.p, pq.q
    xq = x**q
    base = (x**p / (1.0 + xq)) ** (1.0 / p)
    low_a = 1.0 / (1.0 - q * xq / (p * (1.0 + q) * (1.0 + xq)))
    low_b = (1.0 + xq) ** (1.0 / p) * ((p * q + p + q * xq) / (p * (q + 1.0))) ** (-1.0 / q)
    up = (1.0 - xq / (1.0 + xq)) ** (-q / (p * (q + 1.0)))
    return Envelope(base * max(low_a, low_b), base * up)


def alpha(c: float, q: float) -> float:
    """``2 sqrt(pi) / (e q)^(1/q) * ((q(q+4) + 8)/q^3 + c)^(1/6)``."""
    if c <= 0.0 or q <= 1.0:
        raise DomainError(f"alpha needs c > 0 and q > 1, got ({c!r}, {q!r})")
    return 2.0 * _SQRT_PI * math.exp(
        -math.log(math.e * q) / q + math.log((q * (q + 4.0) + 8.0) / q**3 + c) / 6.0
    )


def pi_pq_envelope(pq) -> Envelope:
    pq = as_pq(pq)
    p, q = pq.p, pq.q
    conj = (p / (p - 1.0)) ** (1.0 / q)
    lower = conj * alpha(1.0 / 100.0, q)
    upper = ((p * q + p - q) / (q * (p - 1.0))) ** (1.0 - 1.0 / q) * conj * alpha(1.0 / 30.0, q)
    return Envelope(lower, upper)


def _check_p(p: float) -> None:
    if not (math.isfinite(p) and p > 1.0):
        raise DomainError(f"p must exceed 1, got {p!r}")


def pi_dual_envelope(p: float) -> Envelope:
    """Bounds on ``pi_{p', p}`` with ``p' = p/(p-1)``."""
    _check_p(p)
    scale = 2.0 ** (1.0 - 2.0 / p)
    core = math.pi / p * (4.0 + p)
    extra = (2.0 * _SQRT_PI * math.exp(ln_gamma(0.75) - ln_gamma(0.25))) ** 2
    return Envelope(scale * math.sqrt(core), scale * math.sqrt(core + extra))


def pi_conj_envelope(p: float) -> Envelope:
    """Bounds on ``pi_{p, p'}``, the area inside ``|x|^p + |y|^p = 1``."""
    _check_p(p)
    scale = 2.0 ** (2.0 / p) * _SQRT_PI
    lower = scale * math.sqrt(1.25 - 1.0 / p)
    log_up = (
        (1.5 - 1.0 / p) * math.log(2.0 - 1.0 / p)
        - 0.5
        - (1.0 - 1.0 / p) * math.log(1.5 - 1.0 / p)
    )
    return Envelope(lower, scale * math.exp(log_up))


def carlson_envelope(a: float, b: float, c: float, x: float) -> Envelope:
    """Bounds on ``2F1(a, b; c; x)`` for ``0 < a < c``, ``0 < b < c``, ``x < 1``."""
    if not (0.0 < a < c and 0.0 < b < c):
        raise DomainError(f"carlson_envelope needs 0 < a < c and 0 < b < c, got ({a}, {b}, {c})")
    if not (math.isfinite(x) and x < 1.0):
        raise DomainError(f"carlson_envelope needs x < 1, got {x!r}")
    xc = 1.0 - x
    low_a = (1.0 - b * x / c) ** (-a)
    low_b = xc ** (c - a - b) * (xc + b * x / c) ** (a - c)
    return Envelope(max(low_a, low_b), xc ** (-a * b / c))


class GammaBound(str, enum.Enum):
    ALZER_SIXTH_ROOT = "AlzerSixthRoot"
    KERSHAW_RATIO = "KershawRatio"
    STIRLING_RATIO = "StirlingRatio"
    WENDEL_RATIO = "WendelRatio"


def _unit_s(s: float) -> None:
    if not 0.0 < s < 1.0:
        raise DomainError(f"s must lie in (0, 1), got {s!r}")


def gamma_bound(variant: GammaBound | str, *args: float) -> Envelope:
    """Gamma-function bounds.

    ``AlzerSixthRoot(x)``
        bounds ``Gamma(1 + x)``, ``x >= 0``.
    ``KershawRatio(x, s)``
        bounds ``Gamma(x + 1) / Gamma(x + s)``, ``x > 0``, ``0 < s < 1``.
    ``StirlingRatio(a, b)``
        upper bound on ``Gamma(b) / Gamma(a)``, ``b > a > 0``.
    ``WendelRatio(x, s)``
        bounds ``Gamma(x + s) / (x^s Gamma(x))``, ``x > 0``, ``0 < s < 1``.
    """
    variant = GammaBound(variant)
    if variant is GammaBound.ALZER_SIXTH_ROOT:
        (x,) = args
        if not x >= 0.0:
            raise DomainError(f"AlzerSixthRoot needs x >= 0, got {x!r}")
        poly = 8.0 * x**3 + 4.0 * x**2 + x
        # (x/e)^x in log space; 0^0 == 1
        head = math.log(_SQRT_PI) + (x * (math.log(x) - 1.0) if x > 0.0 else 0.0)
        return Envelope(
            math.exp(head + math.log(poly + 1.0 / 100.0) / 6.0),
            math.exp(head + math.log(poly + 1.0 / 30.0) / 6.0),
        )
    if variant is GammaBound.KERSHAW_RATIO:
        x, s = args
        if not x > 0.0:
            raise DomainError(f"KershawRatio needs x > 0, got {x!r}")
        _unit_s(s)
        return Envelope(
            (x + 0.5 * s) ** (1.0 - s),
            (x - 0.5 + math.sqrt(0.25 + s)) ** (1.0 - s),
        )
    if variant is GammaBound.STIRLING_RATIO:
        a, b = args
        if not b > a > 0.0:
            raise DomainError(f"StirlingRatio needs b > a > 0, got ({a!r}, {b!r})")
        log_up = (b - 0.5) * math.log(b) - (a - 0.5) * math.log(a) + a - b
        return Envelope(-math.inf, math.exp(log_up))
    x, s = args
    if not x > 0.0:
        raise DomainError(f"WendelRatio needs x > 0, got {x!r}")
    _unit_s(s)
    return Envelope((x / (x + s)) ** (1.0 - s), 1.0)
