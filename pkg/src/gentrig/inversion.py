"""Inverse functions ``sin_pq``, ``cos_pq`` and ``sinh_pq``.

Each inverse solves ``f(x) = y`` for an increasing forward map by Newton's
method kept inside a shrinking bracket, falling back to bisection whenever
a Newton step would leave it.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .errors import BracketInvalid, DomainError, MaxIterExceeded
from .pqtrig import arcsin_pq, arcsin_tail, arsinh_pq, as_pq, pq_constants

__all__ = [
    "GuessPolicy",
    "RootConfig",
    "invert_monotone",
    "sin_pq",
    "sin_pq_deriv",
    "cos_pq",
    "sinh_pq",
    "sinh_y_max",
    "X_MAX",
]

X_MAX = 10.0


class GuessPolicy(str, enum.Enum):
    LINEAR_SCALE = "LinearScale"
    MIDPOINT = "Midpoint"


@dataclass(frozen=True)
class RootConfig:
    abs_tol: float = 1e-13
    max_iter: int = 200
    initial_guess_policy: GuessPolicy = GuessPolicy.LINEAR_SCALE

    def __post_init__(self) -> None:
        if not 1e-15 <= self.abs_tol <= 1e-6:
            raise DomainError(f"abs_tol must lie in [1e-15, 1e-6], got {self.abs_tol!r}")
        if self.max_iter < 8:
            raise DomainError(f"max_iter must be at least 8, got {self.max_iter!r}")


DEFAULT_CONFIG = RootConfig()


def invert_monotone(
    f: Callable[[float], float],
    f_deriv: Callable[[float], float],
    y: float,
    bracket: tuple[float, float],
    cfg: RootConfig = DEFAULT_CONFIG,
    *,
    x0: float | None = None,
    f_bracket: tuple[float, float] | None = None,
) -> float:
    """Solve ``f(x) = y`` for increasing ``f`` on ``bracket``.

    Converges on the residual ``|f(x) - y| <= abs_tol * (1 + |y|)``.  If the
    bracket shrinks to adjacent floats first, the better end is returned:
    near a singular derivative no float meets the tolerance and that end is
    the closest representable answer.

    ``x0`` overrides the initial guess policy; ``f_bracket`` passes known
    values of ``f`` at the bracket ends.
    """
    lo, hi = bracket
    if not lo < hi:
        raise BracketInvalid(f"empty bracket ({lo!r}, {hi!r})")
    flo, fhi = f_bracket if f_bracket is not None else (f(lo), f(hi))
    tol = cfg.abs_tol * (1.0 + abs(y))
    if not (flo - tol <= y <= fhi + tol):
        raise BracketInvalid(f"y={y!r} is outside [{flo!r}, {fhi!r}]")
    if abs(flo - y) <= tol:
        return lo
    if abs(fhi - y) <= tol:
        return hi

    if x0 is None:
        if cfg.initial_guess_policy is GuessPolicy.LINEAR_SCALE:
            x0 = lo + (hi - lo) * (y - flo) / (fhi - flo)
        else:
            x0 = 0.5 * (lo + hi)
    x = min(max(x0, lo), hi)
    if not lo < x < hi:
        x = 0.5 * (lo + hi)
    best_x, best_r = (lo, abs(flo - y)) if abs(flo - y) < abs(fhi - y) else (hi, abs(fhi - y))

    for _ in range(cfg.max_iter):
        r = f(x) - y
        if abs(r) < best_r:
            best_x, best_r = x, abs(r)
        if abs(r) <= tol:
            return x
        if r < 0.0:
            lo = x
        else:
            hi = x
        d = f_deriv(x)
        xn = x - r / d if (math.isfinite(d) and d > 0.0) else math.nan
        if not lo < xn < hi:
            xn = 0.5 * (lo + hi)
            if not lo < xn < hi:
                # bracket is two adjacent floats
                return best_x
        x = xn
    raise MaxIterExceeded(f"no root to {tol:g} after {cfg.max_iter} iterations (y={y!r})")


def _check_range(y: float, top: float, fn: str) -> None:
    if not (isinstance(y, (int, float)) and math.isfinite(y)) or not 0.0 <= y <= top:
        raise DomainError(f"{fn} needs 0 <= y <= {top!r}, got {y!r}")


def sin_pq(pq, y: float, cfg: RootConfig = DEFAULT_CONFIG) -> float:
    """``sin_{p,q}(y)`` on ``[0, pi_{p,q}/2]``, the inverse of ``arcsin_pq``.

    Above the point where ``sin^q = 1/2`` the root is found on the tail
    integral in ``w = 1 - sin^q`` instead, where the forward series is short
    and the derivative stays bounded.
    """
    pq = as_pq(pq)
    half = pq_constants(pq).pi_half
    _check_range(y, half, "sin_pq")
    if y == 0.0:
        return 0.0
    if y == half:
        return 1.0
    p, q = pq.p, pq.q
    if y > _tail_split(pq):
        return (1.0 - _cos_power_from_tail(pq, y, cfg)) ** (1.0 / q)

    def deriv(x: float) -> float:
        return (-math.expm1(q * math.log(x))) ** (-1.0 / p)

    x0 = min(max(y / half, 1e-6), 1.0 - 1e-6)
    if cfg.initial_guess_policy is GuessPolicy.MIDPOINT:
        x0 = 0.5
    return invert_monotone(
        lambda x: arcsin_pq(pq, x), deriv, y, (0.0, 1.0), cfg,
        x0=x0, f_bracket=(0.0, half),
    )


def _tail_split(pq) -> float:
    """Value of ``y`` above which ``cos_pq`` switches to the tail route."""
    return pq_constants(pq).pi_half - arcsin_tail(pq, 0.5)


def _cos_power_from_tail(pq, y: float, cfg: RootConfig) -> float:
    """Solve ``arcsin_tail(w) = pi/2 - y`` for ``w = cos_pq(y)^p``."""
    p, q = pq.p, pq.q
    delta = pq_constants(pq).pi_half - y
    alpha = 1.0 - 1.0 / p
    w_hi = 0.5
    g_hi = arcsin_tail(pq, w_hi)

    def deriv(w: float) -> float:
        return w ** (-1.0 / p) * (1.0 - w) ** (1.0 / q - 1.0) / q

    # leading term of the tail is w^alpha / (q alpha)
    x0 = min((q * alpha * delta) ** (1.0 / alpha), 0.5 * w_hi)
    cfg_tail = RootConfig(abs_tol=cfg.abs_tol * 1e-2 if cfg.abs_tol >= 1e-13 else cfg.abs_tol,
                          max_iter=cfg.max_iter)
    return invert_monotone(
        lambda w: arcsin_tail(pq, w), deriv, delta, (0.0, w_hi), cfg_tail,
        x0=x0, f_bracket=(0.0, g_hi),
    )


def cos_pq(pq, y: float, cfg: RootConfig = DEFAULT_CONFIG) -> float:
    """``cos_{p,q}(y) = (1 - sin_{p,q}(y)^q)^(1/p)`` on ``[0, pi_{p,q}/2]``.

    Once ``sin_pq(y)^q`` exceeds 1/2 the complement ``1 - sin^q`` is solved
    for directly from the tail integral instead of being formed by
    subtraction, which keeps full relative accuracy up to ``pi_{p,q}/2``.
    """
    pq = as_pq(pq)
    half = pq_constants(pq).pi_half
    _check_range(y, half, "cos_pq")
    if y == 0.0:
        return 1.0
    if y == half:
        return 0.0
    if y <= _tail_split(pq):
        u = sin_pq(pq, y, cfg)
        return (-math.expm1(pq.q * math.log(u))) ** (1.0 / pq.p)
    return _cos_power_from_tail(pq, y, cfg) ** (1.0 / pq.p)


def sin_pq_deriv(pq, y: float, cfg: RootConfig = DEFAULT_CONFIG) -> float:
    """Derivative of ``sin_pq`` at ``y``; identical to ``cos_pq``."""
    return cos_pq(pq, y, cfg)


@lru_cache(maxsize=512)
def _y_max(p: float, q: float, x_max: float) -> float:
    return arsinh_pq((p, q), x_max)


def sinh_y_max(pq, x_max: float = X_MAX) -> float:
    """Upper end of the supported ``sinh_pq`` domain, ``arsinh_pq(x_max)``."""
    pq = as_pq(pq)
    return _y_max(pq.p, pq.q, float(x_max))


def sinh_pq(pq, y: float, cfg: RootConfig = DEFAULT_CONFIG, x_max: float = X_MAX) -> float:
    """``sinh_{p,q}(y)`` on ``[0, arsinh_pq(x_max)]``, the inverse of ``arsinh_pq``."""
    pq = as_pq(pq)
    top = sinh_y_max(pq, x_max)
    _check_range(y, top, "sinh_pq")
    if y == 0.0:
        return 0.0
    p, q = pq.p, pq.q

    def deriv(x: float) -> float:
        return (1.0 + x**q) ** (-1.0 / p)

    x0 = min(max(y, 1e-6), x_max * (1.0 - 1e-6))
    if cfg.initial_guess_policy is GuessPolicy.MIDPOINT:
        x0 = 0.5 * x_max
    return invert_monotone(
        lambda x: arsinh_pq(pq, x), deriv, y, (0.0, x_max), cfg,
        x0=x0, f_bracket=(0.0, top),
    )
