"""Tanh-sinh (double-exponential) quadrature on a finite interval.

This is the independent check on the hypergeometric route: it integrates
the defining integrands directly.  Nodes live strictly inside the interval;
for integrands with an endpoint singularity pass ``gaps=True`` and the
integrand receives the exact distances to both ends, so ``(1 - t**q)``
never has to be formed from a ``t`` that has rounded to 1.

Levels are numbered by the approximate log2 of the node count: level 4 uses
step ``h = 1/2``, each level halves ``h``, and level 12 is the last.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .errors import DomainError, NoConvergence

__all__ = [
    "QuadResult",
    "integrate_de",
    "arcsin_quad",
    "arsinh_quad",
    "hyp2f1_euler_integral",
    "FIRST_LEVEL",
    "LAST_LEVEL",
]

FIRST_LEVEL = 4
LAST_LEVEL = 12
_MIN_LEVELS = 3  # never accept agreement between the two coarsest levels


@dataclass(frozen=True)
class QuadResult:
    value: float
    abs_err_est: float
    levels_used: int


def _step(level: int) -> float:
    return 2.0 ** (FIRST_LEVEL - 3 - level)


@lru_cache(maxsize=None)
def _level_nodes(level: int) -> tuple[tuple[float, float], ...]:
    """Nodes ``(d, w)`` for t >= 0 that are new at ``level``.

    ``d`` is the distance from the node to the nearer end of [0, 1] and
    ``w`` the unit-interval weight without the step factor ``h``.  The
    centre node (t = 0) belongs to the first level and is returned with
    d = 0.5.
    """
    h = _step(level)
    k = 0 if level == FIRST_LEVEL else 1
    stride = 1 if level == FIRST_LEVEL else 2
    out = []
    while True:
        t = k * h
        u = 0.5 * math.pi * math.sinh(t)
        e = math.exp(-2.0 * u)
        d = e / (1.0 + e)
        if d < 1e-300:
            break
        w = math.pi * math.cosh(t) * d * (1.0 - d)
        out.append((d, w))
        k += stride
    return tuple(out)


def _level_sum(
    f: Callable[..., float], lo: float, hi: float, level: int, gaps: bool
) -> float:
    span = hi - lo
    acc = 0.0
    for d, w in _level_nodes(level):
        g = span * d
        if d == 0.5:
            x = lo + g
            acc += w * (f(x, g, span - g) if gaps else f(x))
            continue
        left, right = lo + g, hi - g
        if gaps:
            acc += w * (f(left, g, span - g) + f(right, span - g, g))
        else:
            # never evaluate exactly at an end point
            if lo < left < hi:
                acc += w * f(left)
            if lo < right < hi:
                acc += w * f(right)
    return acc


def integrate_de(
    f: Callable[..., float],
    lo: float,
    hi: float,
    tol: float = 1e-12,
    *,
    rtol: float = 0.0,
    gaps: bool = False,
) -> QuadResult:
    """Integrate ``f`` over ``(lo, hi)`` by tanh-sinh quadrature.

    Parameters
    ----------
    f : callable
        Integrand.  Called as ``f(x)``, or ``f(x, x - lo, hi - x)`` when
        ``gaps`` is true.  May be singular (integrably) at either end.
    lo, hi : float
        Finite limits with ``lo < hi``.
    tol : float
        Absolute tolerance on the level-to-level difference, in
        ``[1e-14, 1e-6]``.
    rtol : float
        Optional relative tolerance; convergence is declared when the
        difference is below ``max(tol, rtol * |value|)``.

    Raises
    ------
    NoConvergence
        If two successive levels still disagree at level 12.
    """
    if not (math.isfinite(lo) and math.isfinite(hi)) or not lo < hi:
        raise DomainError(f"need finite lo < hi, got ({lo!r}, {hi!r})")
    if not 1e-14 <= tol <= 1e-6:
        raise DomainError(f"tol must lie in [1e-14, 1e-6], got {tol!r}")
    span = hi - lo
    raw = 0.0
    prev = None
    diff = math.inf
    for level in range(FIRST_LEVEL, LAST_LEVEL + 1):
        raw += _level_sum(f, lo, hi, level, gaps)
        est = raw * _step(level) * span
        if not math.isfinite(est):
            raise NoConvergence(f"non-finite partial sum at level {level}")
        if prev is not None:
            diff = abs(est - prev)
            if level - FIRST_LEVEL >= _MIN_LEVELS - 1 and diff <= max(tol, rtol * abs(est)):
                return QuadResult(est, diff, level)
        prev = est
    raise NoConvergence(
        f"tanh-sinh did not converge to {tol:g} by level {LAST_LEVEL} (last diff {diff:.3g})"
    )


def _check_pq(pq) -> tuple[float, float]:
    p, q = float(pq.p), float(pq.q)
    return p, q


def arcsin_quad(pq, x: float) -> QuadResult:
    """``int_0^x (1 - t^q)^(-1/p) dt`` by direct quadrature."""
    p, q = _check_pq(pq)
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"arcsin_quad needs 0 <= x <= 1, got {x!r}")
    if x == 0.0:
        return QuadResult(0.0, 0.0, 0)
    inv_p = -1.0 / p
    if x == 1.0:
        def f(t, glo, ghi):
            lt = math.log1p(-ghi) if ghi < 0.5 else math.log(glo)
            return (-math.expm1(q * lt)) ** inv_p
        return integrate_de(f, 0.0, 1.0, 1e-10, gaps=True)

    def f(t, glo, ghi):
        return (-math.expm1(q * math.log(t))) ** inv_p
    return integrate_de(f, 0.0, x, 1e-12, gaps=True)


def arsinh_quad(pq, x: float) -> QuadResult:
    """``int_0^x (1 + t^q)^(-1/p) dt`` by direct quadrature."""
    p, q = _check_pq(pq)
    if not (math.isfinite(x) and x >= 0.0):
        raise DomainError(f"arsinh_quad needs x >= 0, got {x!r}")
    if x == 0.0:
        return QuadResult(0.0, 0.0, 0)
    inv_p = -1.0 / p
    return integrate_de(lambda t: (1.0 + t**q) ** inv_p, 0.0, x, 1e-12)


def hyp2f1_euler_integral(
    a: float, b: float, c: float, x: float, xc: float, rtol: float = 1e-13
) -> QuadResult:
    """``2F1(a, b; c; x)`` from Euler's integral, for ``0 <= x < 1``.

    ``Gamma(c) / (Gamma(b) Gamma(c-b)) * int_0^1 t^(b-1) (1-t)^(c-b-1)
    (1 - x t)^(-a) dt``, valid for ``c > b > 0``; ``a`` and ``b`` are
    swapped if only ``a`` qualifies.  ``xc`` is ``1 - x``.
    """
    from .special_fn import ln_gamma

    if not (c > b > 0.0):
        if c > a > 0.0:
            a, b = b, a
        else:
            raise NoConvergence(
                f"no integral representation for 2F1({a}, {b}; {c}; x) with these parameters"
            )
    bm1, cbm1 = b - 1.0, c - b - 1.0

    def f(t, glo, ghi):
        # 1 - x t == (1 - t) + t (1 - x), without cancellation near t = 1
        return math.exp(bm1 * math.log(glo) + cbm1 * math.log(ghi) - a * math.log(ghi + glo * xc))

    res = integrate_de(f, 0.0, 1.0, 1e-14, rtol=rtol, gaps=True)
    norm = math.exp(ln_gamma(c) - ln_gamma(b) - ln_gamma(c - b))
    return QuadResult(norm * res.value, norm * res.abs_err_est, res.levels_used)
