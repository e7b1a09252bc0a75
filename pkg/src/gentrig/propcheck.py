"""Registry of inequality/identity predicates and a grid sweep engine.

Every predicate returns a signed *slack* at a parameter point: positive
means the claimed relation holds there.  Identities return ``-|residual|``.
A sweep reduces a predicate over a :class:`GridSpec` to a
:class:`PredicateReport` holding the worst point, chosen by slack
normalised by the size of the compared quantities and broken by first
occurrence in grid order.

Monotonicity claims are checked between consecutive grid values; midpoint
and two-point claims are checked at the sampled pairs only.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from . import bounds
from .errors import DomainError, DomainViolation, UnknownPredicate
from .inversion import cos_pq, sin_pq, sinh_pq, sinh_y_max
from .pqtrig import PqParams, arcsin_pq, arsinh_pq, m_pq, pi_pq, pq_constants
from .special_fn import HypTriple, beta, gauss_2f1, hyp2f1_series, ln_gamma

__all__ = [
    "PredicateClass",
    "PredicateSpec",
    "PredicateReport",
    "GridSpec",
    "list_predicates",
    "lookup",
    "evaluate_predicate",
    "sweep",
    "run_all",
]


class PredicateClass(str, enum.Enum):
    THEOREM = "Theorem"
    LEMMA = "Lemma"
    IDENTITY = "Identity"
    CONJECTURE = "Conjecture"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class GridSpec:
    """Ordered parameter values a sweep draws its points from.

    ``x_endpoint`` values are appended for predicates sensitive to the
    right end of (0, 1); ``n_uniform`` sets the number of interior points
    for predicates sampled on an interval of their own.
    """

    p_values: tuple[float, ...] = (1.1, 1.5, 2.0, 2.5, 3.0, 5.0, 10.0)
    q_values: tuple[float, ...] = (1.1, 1.5, 2.0, 2.5, 3.0, 5.0, 10.0)
    x_values: tuple[float, ...] = tuple(round(0.05 * i, 2) for i in range(1, 20))
    r_values: tuple[float, ...] = tuple(round(0.05 * i, 2) for i in range(1, 20))
    s_values: tuple[float, ...] = tuple(round(0.05 * i, 2) for i in range(1, 20))
    k_values: tuple[float, ...] = (0.25, 0.5, 2.0, 3.0, 5.0)
    x_endpoint: tuple[float, ...] = (0.99,)
    n_uniform: int = 50

    @classmethod
    def preset(cls, name: str) -> "GridSpec":
        if name == "default":
            return cls()
        if name == "coarse":
            xs = (0.1, 0.3, 0.5, 0.7, 0.9)
            return cls(
                p_values=(1.5, 2.0, 3.0), q_values=(1.5, 2.0, 3.0),
                x_values=xs, r_values=xs, s_values=xs,
                k_values=(0.5, 2.0, 3.0), n_uniform=10,
            )
        if name == "fine":
            pv = (1.1, 1.25, 1.5, 1.75, 2.0, 2.5, 3.0, 4.0, 5.0, 7.5, 10.0)
            xs = tuple(round(0.025 * i, 3) for i in range(1, 40))
            rs = tuple(round(0.05 * i, 2) for i in range(1, 20))
            return cls(
                p_values=pv, q_values=pv, x_values=xs, r_values=rs, s_values=rs,
                k_values=(0.1, 0.25, 0.5, 0.75, 1.5, 2.0, 3.0, 5.0, 10.0),
                x_endpoint=(0.99, 0.999), n_uniform=200,
            )
        raise DomainError(f"unknown grid preset {name!r}")

    @classmethod
    def empty(cls) -> "GridSpec":
        return cls((), (), (), (), (), (), (), 0)

    def pq_pairs(self) -> Iterator[tuple[float, float]]:
        for p in self.p_values:
            for q in self.q_values:
                yield p, q

    def xs_with_endpoint(self) -> tuple[float, ...]:
        return tuple(sorted(set(self.x_values) | set(self.x_endpoint))) if self.x_values else ()

    def ordered_pairs(self) -> Iterator[tuple[float, float]]:
        """(r, s) with r >= s, for predicates symmetric in r and s."""
        for r in self.r_values:
            for s in self.s_values:
                if s <= r:
                    yield r, s


class _Values:
    """Per-sweep memo of function values; keys are exact floats."""

    def __init__(self) -> None:
        self._memo: dict[tuple, float] = {}

    def _get(self, key: tuple, fn: Callable[[], float]) -> float:
        try:
            return self._memo[key]
        except KeyError:
            v = self._memo[key] = fn()
            return v

    def asin(self, p, q, x):
        return self._get(("asin", p, q, x), lambda: arcsin_pq((p, q), x))

    def ash(self, p, q, x):
        return self._get(("ash", p, q, x), lambda: arsinh_pq((p, q), x))

    def sin(self, p, q, y):
        return self._get(("sin", p, q, y), lambda: sin_pq((p, q), y))

    def cos(self, p, q, y):
        return self._get(("cos", p, q, y), lambda: cos_pq((p, q), y))

    def sinh(self, p, q, y):
        return self._get(("sinh", p, q, y), lambda: sinh_pq((p, q), y))

    def hyp(self, a, b, c, x):
        return self._get(("hyp", a, b, c, x), lambda: gauss_2f1(HypTriple(a, b, c), x).value)


# Each claim helper returns (slack, scale); scale is the larger magnitude.

def _le(lhs: float, rhs: float) -> tuple[float, float]:
    return rhs - lhs, max(abs(lhs), abs(rhs))


def _ge(lhs: float, rhs: float) -> tuple[float, float]:
    return lhs - rhs, max(abs(lhs), abs(rhs))


def _residual(lhs: float, rhs: float) -> tuple[float, float]:
    return -abs(lhs - rhs), max(abs(lhs), abs(rhs))


def _worst(*claims: tuple[float, float]) -> tuple[float, float]:
    return min(claims, key=lambda c: c[0] / (1.0 + c[1]))


@dataclass(frozen=True)
class PredicateSpec:
    id: str
    klass: PredicateClass
    arity: tuple[str, ...]
    domain: str
    parts: tuple[str, ...]
    evaluate: Callable[[_Values, tuple], tuple[float, float]] = field(repr=False, compare=False)
    points: Callable[[GridSpec], Iterable[tuple]] = field(repr=False, compare=False)
    in_domain: Callable[[tuple], bool] = field(repr=False, compare=False)
    # identities pass when |residual| <= tol * residual_scale(point)
    tol: float = 1e-9


@dataclass(frozen=True)
class PredicateReport:
    id: str
    klass: PredicateClass
    grid_points: int
    worst_slack: float
    worst_scale: float
    worst_location: tuple
    passed: bool
    status: str

    def as_record(self) -> dict:
        return {
            "id": self.id,
            "class": self.klass.value,
            "grid_points": self.grid_points,
            "worst_slack": self.worst_slack,
            "worst_location": list(self.worst_location),
            "status": self.status,
        }


# --------------------------------------------------------------------------
# domains

def _pq_ok(p, q) -> bool:
    return p > 1.0 and q > 1.0


def _unit(*xs) -> bool:
    return all(0.0 < x < 1.0 for x in xs)


# --------------------------------------------------------------------------
# point generators

def _pts_pqx(g: GridSpec, endpoint: bool = True):
    xs = g.xs_with_endpoint() if endpoint else g.x_values
    for p, q in g.pq_pairs():
        for x in xs:
            yield (p, q, x)


def _pts_pq(g: GridSpec):
    yield from g.pq_pairs()


def _pts_p(g: GridSpec):
    for p in g.p_values:
        yield (p,)


def _consecutive(vals):
    vals = sorted(vals)
    return list(zip(vals, vals[1:]))


def _pts_k_pairs(g: GridSpec, k_min: float):
    ks = [k for k in g.k_values if k > k_min]
    for p, q in g.pq_pairs():
        for x in g.xs_with_endpoint():
            for k1, k2 in _consecutive(ks):
                yield (p, q, x, k1, k2)


def _pts_pqxk(g: GridSpec):
    ks = [k for k in g.k_values if k >= 1.0]
    for p, q in g.pq_pairs():
        for x in g.xs_with_endpoint():
            for k in ks:
                yield (p, q, x, k)


def _pts_pqrs(g: GridSpec):
    for p, q in g.pq_pairs():
        for r, s in g.ordered_pairs():
            yield (p, q, r, s)


def _pts_pqkrs(g: GridSpec, k_filter):
    ks = [k for k in g.k_values if k_filter(k)]
    for p, q in g.pq_pairs():
        for k in ks:
            for r, s in g.ordered_pairs():
                yield (p, q, k, r, s)


def _pts_g1g2(g: GridSpec):
    ks = [k for k in g.k_values if k not in (0.0, 1.0) and k > 0.0]
    for p, q in g.pq_pairs():
        for k in ks:
            for x1, x2 in _consecutive(g.xs_with_endpoint()):
                yield (p, q, k, x1, x2)


_LIMIT_LO = 1e-6
_LIMIT_HI = 1.0 - 1e-6


def _pts_hyp(g: GridSpec):
    xs = list(g.xs_with_endpoint())
    nxt = {a: b for a, b in _consecutive(xs)}
    for p, q in g.pq_pairs():
        if not xs:
            continue
        for x in xs:
            yield (p, q, x, nxt.get(x, math.nan))
        yield (p, q, _LIMIT_LO, math.nan)
        yield (p, q, _LIMIT_HI, math.nan)


def _pts_pfaff(g: GridSpec):
    for p, q in g.pq_pairs():
        for x in g.x_values:
            if x < 0.9:
                yield (p, q, x)


_CARLSON_FAR = (-2.0, -5.0, -20.0)


def _pts_carlson(g: GridSpec):
    if not g.x_values:
        return
    xs = sorted({-x for x in g.x_values} | set(_CARLSON_FAR) | set(g.xs_with_endpoint()))
    for p, q in g.pq_pairs():
        for x in xs:
            yield (p, q, x)


def _pts_gamma(g: GridSpec):
    if not g.x_values:
        return
    args = sorted(set(g.x_values) | set(g.p_values))
    ss = [s for s in g.s_values if 0.0 < s < 1.0]
    for x in [0.0] + args:
        yield ("AlzerSixthRoot", x)
    for x in args:
        for s in ss:
            yield ("KershawRatio", x, s)
    for i, a in enumerate(args):
        for b in args[i + 1:]:
            yield ("StirlingRatio", a, b)
    for x in args:
        for s in ss:
            yield ("WendelRatio", x, s)


EGL_PQ = (4.0 / 3.0, 4.0)


def _pts_egl(g: GridSpec):
    n = g.n_uniform
    quarter = 0.5 * pq_constants(EGL_PQ).pi_half
    for i in range(1, n + 1):
        yield (quarter * i / (n + 1),)


def _pts_ode(g: GridSpec):
    fr = [f for f in g.x_values if 0.1 <= f <= 0.9]
    for p, q in g.pq_pairs():
        for f in fr:
            yield (p, q, f)


# --------------------------------------------------------------------------
# evaluators

def _ev_thm11_arcsin(v, pt):
    p, q, x = pt
    env = bounds.arcsin_envelope((p, q), x)
    a = v.asin(p, q, x)
    return _worst(_le(env.lower, a), _le(a, env.upper))


def _ev_thm11_arsinh(v, pt):
    p, q, x = pt
    env = bounds.arsinh_envelope((p, q), x)
    a = v.ash(p, q, x)
    return _worst(_le(env.lower, a), _le(a, env.upper))


def _ev_thm12_pi(v, pt):
    p, q = pt
    env = bounds.pi_pq_envelope((p, q))
    t = pi_pq((p, q))
    return _worst(_le(env.lower, t), _le(t, env.upper))


def _ev_thm12_dual(v, pt):
    (p,) = pt
    env = bounds.pi_dual_envelope(p)
    t = pi_pq((p / (p - 1.0), p))
    return _worst(_le(env.lower, t), _le(t, env.upper))


def _ev_thm12_conj(v, pt):
    (p,) = pt
    env = bounds.pi_conj_envelope(p)
    t = pi_pq((p, p / (p - 1.0)))
    return _worst(_le(env.lower, t), _le(t, env.upper))


def _ev_k_mono(v, pt):
    p, q, x, k1, k2 = pt
    # (arcsin(x^k))^(1/k) decreasing, (arsinh(x^k))^(1/k) increasing in k
    a1 = v.asin(p, q, x**k1) ** (1.0 / k1)
    a2 = v.asin(p, q, x**k2) ** (1.0 / k2)
    h1 = v.ash(p, q, x**k1) ** (1.0 / k1)
    h2 = v.ash(p, q, x**k2) ** (1.0 / k2)
    return _worst(_ge(a1, a2), _le(h1, h2))


def _ev_k_scale(v, pt):
    p, q, x, k1, k2 = pt
    return _ge(k1 * v.asin(p, q, x / k1), k2 * v.asin(p, q, x / k2))


def _ev_chains(v, pt):
    p, q, x, k = pt
    a = v.asin(p, q, x)
    h = v.ash(p, q, x)
    return _worst(
        _le(v.asin(p, q, x**k) ** (1.0 / k), a),
        _le(a, v.asin(p, q, x ** (1.0 / k)) ** k),
        _le(v.ash(p, q, x ** (1.0 / k)) ** k, h),
        _le(h, v.ash(p, q, x**k) ** (1.0 / k)),
        _le(v.asin(p, q, x / k), a / k),
    )


def _ev_mult(v, pt):
    p, q, r, s = pt
    a_rs = v.asin(p, q, r * s)
    a_mid = math.sqrt(v.asin(p, q, r * r) * v.asin(p, q, s * s))
    a_prod = v.asin(p, q, r) * v.asin(p, q, s)
    h_rs = v.ash(p, q, r * s)
    h_mid = math.sqrt(v.ash(p, q, r * r) * v.ash(p, q, s * s))
    h_prod = v.ash(p, q, r) * v.ash(p, q, s)
    return _worst(_le(a_rs, a_mid), _le(a_mid, a_prod), _le(h_prod, h_mid), _le(h_mid, h_rs))


def _ev_g1g2(v, pt):
    p, q, k, x1, x2 = pt

    def g1(x):
        return v.asin(p, q, x**k) / v.asin(p, q, x) ** k

    def g2(x):
        return v.ash(p, q, x**k) / v.ash(p, q, x) ** k

    half = pq_constants((p, q)).pi_half
    m = m_pq((p, q))

    def disp(x):
        lhs_s = half ** (1.0 - 1.0 / k) * v.asin(p, q, x**k) ** (1.0 / k)
        lhs_h = m ** (1.0 - 1.0 / k) * v.ash(p, q, x**k) ** (1.0 / k)
        if 0.0 < k < 1.0:
            return _le(lhs_s, v.asin(p, q, x)), _ge(lhs_h, v.ash(p, q, x))
        return _ge(lhs_s, v.asin(p, q, x)), _le(lhs_h, v.ash(p, q, x))

    if 0.0 < k < 1.0:
        mono = (_le(g1(x1), g1(x2)), _ge(g2(x1), g2(x2)))
    else:
        mono = (_ge(g1(x1), g1(x2)), _le(g2(x1), g2(x2)))
    return _worst(*mono, *disp(x1), *disp(x2))


def _ev_ratio_power(v, pt):
    p, q, k, r, s = pt
    lhs_a = (v.asin(p, q, s) / v.asin(p, q, r)) ** k
    rhs_a = v.asin(p, q, s**k) / v.asin(p, q, r**k)
    lhs_h = v.ash(p, q, s**k) / v.ash(p, q, r**k)
    rhs_h = (v.ash(p, q, s) / v.ash(p, q, r)) ** k
    return _worst(_le(lhs_a, rhs_a), _le(lhs_h, rhs_h))


def _ev_sin_ratio(v, pt):
    p, q, k, r, s = pt
    sin_pow = (v.sin(p, q, r) / v.sin(p, q, s)) ** k
    sin_arg = v.sin(p, q, r**k) / v.sin(p, q, s**k)
    sinh_pow = (v.sinh(p, q, r) / v.sinh(p, q, s)) ** k
    sinh_arg = v.sinh(p, q, r**k) / v.sinh(p, q, s**k)
    if k > 1.0:
        return _worst(_le(sin_pow, sin_arg), _ge(sinh_pow, sinh_arg))
    return _worst(_ge(sin_pow, sin_arg), _le(sinh_pow, sinh_arg))


def _ev_midpoint(v, pt):
    # convexity of arcsin/sinh and concavity of sin/arsinh, as two-point claims
    p, q, r, s = pt
    mid = 0.5 * (r + s)
    return _worst(
        _ge(v.asin(p, q, r) + v.asin(p, q, s), 2.0 * v.asin(p, q, mid)),
        _le(v.sin(p, q, r) + v.sin(p, q, s), 2.0 * v.sin(p, q, mid)),
        _le(v.ash(p, q, r) + v.ash(p, q, s), 2.0 * v.ash(p, q, mid)),
        _ge(v.sinh(p, q, r) + v.sinh(p, q, s), 2.0 * v.sinh(p, q, mid)),
    )


def _ev_conj(v, pt):
    p, q, r, s = pt
    g = math.sqrt(r * s)
    return _worst(
        _le(v.sin(p, q, g), math.sqrt(v.sin(p, q, r) * v.sin(p, q, s))),
        _ge(v.sinh(p, q, g), math.sqrt(v.sinh(p, q, r) * v.sinh(p, q, s))),
    )


def _subadd_parts(p, q, r, s):
    quarter = 0.5 * pq_constants((p, q)).pi_half
    return r < quarter and s < quarter, r + s <= sinh_y_max((p, q))


def _ev_subadd(v, pt):
    p, q, r, s = pt
    sin_ok, sinh_ok = _subadd_parts(p, q, r, s)
    claims = []
    if sin_ok:
        claims.append(_le(v.sin(p, q, r + s), v.sin(p, q, r) + v.sin(p, q, s)))
    if sinh_ok:
        claims.append(_ge(v.sinh(p, q, r + s), v.sinh(p, q, r) + v.sinh(p, q, s)))
    return _worst(*claims)


def _ev_order(v, pt):
    p, q, x = pt
    return _worst(_le(v.ash(p, q, x), v.asin(p, q, x)), _le(v.sin(p, q, x), v.sinh(p, q, x)))


def _ev_ratio_mono(v, pt):
    p, q, r, s = pt

    def norm(x):
        return (x**p / (1.0 + x**q)) ** (1.0 / p)

    return _worst(
        _le(v.asin(p, q, s) / s, v.asin(p, q, r) / r),
        _le(v.ash(p, q, s) / norm(s), v.ash(p, q, r) / norm(r)),
        _ge(v.ash(p, q, s) / s, v.ash(p, q, r) / r),
    )


def _hyp_g(v, a, b, x):
    return (v.hyp(a, b, a + b, x) - 1.0) / -math.log1p(-x)


def _ev_hyp(v, pt):
    p, q, x, x_next = pt
    a, b, c = 1.0 / p, 1.0 / q, 1.0 + 1.0 / q
    # identity regime with c < a + b as well as the arcsin triple
    a2, b2, c2 = 1.0, 1.0 / p + 1.0 / q, 1.0 + 1.0 / q
    claims = []
    for ta, tb, tc in ((a, b, c), (a2, b2, c2)):
        euler = (1.0 - x) ** (tc - ta - tb) * v.hyp(tc - ta, tc - tb, tc, x)
        claims.append(_residual(v.hyp(ta, tb, tc, x), euler))
    f_pos = v.hyp(a, b, c, x)
    f_neg = v.hyp(-a, b, c, x)
    claims.append(_le(f_neg, 1.0 - a * b * x / c))
    claims.append(_ge(f_pos + f_neg, 2.0))
    gauss = math.exp(ln_gamma(c) + ln_gamma(c - a - b) - ln_gamma(c - a) - ln_gamma(c - b))
    claims.append(_le(f_pos, gauss))
    if x == _LIMIT_LO:
        lim = a * b / (a + b)
        d = abs(_hyp_g(v, a, b, x) - lim)
        claims.append((1e-6 - d, lim))
    elif x == _LIMIT_HI:
        claims.append(_le(_hyp_g(v, a, b, x), 1.0 / beta(a, b)))
    elif not math.isnan(x_next):
        claims.append(_le(_hyp_g(v, a, b, x), _hyp_g(v, a, b, x_next)))
    return _worst(*claims)


def _ev_pfaff(v, pt):
    p, q, x = pt
    worst = []
    for a, b, c in ((1.0 / p, 1.0 / q, 1.0 + 1.0 / q), (1.0, 1.0 / p, 1.0 + 1.0 / q)):
        lhs = hyp2f1_series(a, b, c, -x)[0]
        rhs = (1.0 + x) ** (-b) * hyp2f1_series(b, c - a, c, x / (1.0 + x))[0]
        worst.append(-abs(lhs - rhs))
    return min(worst), 1.0


def _ev_carlson(v, pt):
    p, q, x = pt
    claims = []
    for a, b, c in ((1.0 / p, 1.0 / q, 1.0 + 1.0 / q), (1.0, 1.0 / p, 1.0 + 1.0 / q)):
        env = bounds.carlson_envelope(a, b, c, x)
        f = v.hyp(a, b, c, x)
        claims += [_le(env.lower, f), _le(f, env.upper)]
    return _worst(*claims)


def _ev_gamma(v, pt):
    tag, *args = pt
    env = bounds.gamma_bound(tag, *args)
    if tag == "AlzerSixthRoot":
        (x,) = args
        t = math.exp(ln_gamma(1.0 + x))
    elif tag == "KershawRatio":
        x, s = args
        t = math.exp(ln_gamma(x + 1.0) - ln_gamma(x + s))
    elif tag == "StirlingRatio":
        a, b = args
        return _le(math.exp(ln_gamma(b) - ln_gamma(a)), env.upper)
    else:
        x, s = args
        t = math.exp(ln_gamma(x + s) - s * math.log(x) - ln_gamma(x))
        return _worst(_le(env.lower, t), _le(t, env.upper))
    return _worst(_le(env.lower, t), _le(t, env.upper))


def _ev_egl(v, pt):
    (x,) = pt
    p, q = EGL_PQ
    u = v.sin(p, q, x)
    w = v.cos(p, q, x)
    rhs = 2.0 * u * w ** (1.0 / 3.0) / math.sqrt(1.0 + 4.0 * u**4 * w ** (4.0 / 3.0))
    return -abs(v.sin(p, q, 2.0 * x) - rhs), 1.0


ODE_STEP = 1e-5


def _ev_ode(v, pt):
    p, q, f = pt
    const = pq_constants((p, q))
    y = f * const.pi_half
    h = ODE_STEP
    # phi_p(u') with u' = cos_pq >= 0
    d_phi = (v.cos(p, q, y + h) ** (p - 1.0) - v.cos(p, q, y - h) ** (p - 1.0)) / (2.0 * h)
    u_pow = v.sin(p, q, y) ** (q - 1.0)
    return -abs(d_phi + const.lambda_star * u_pow), 1.0 + u_pow


# --------------------------------------------------------------------------
# registry

def _spec(id, klass, arity, domain, parts, ev, pts, dom, tol=1e-9):
    return PredicateSpec(id, klass, arity, domain, parts, ev, pts, dom, tol)


_T, _L, _I, _C = (PredicateClass.THEOREM, PredicateClass.LEMMA,
                  PredicateClass.IDENTITY, PredicateClass.CONJECTURE)

_REGISTRY: tuple[PredicateSpec, ...] = (
    _spec("thm1.1-arcsin", _T, ("p", "q", "x"), "p,q > 1; x in (0,1)",
          ("arcsin lower", "arcsin upper min"),
          _ev_thm11_arcsin, _pts_pqx, lambda t: _pq_ok(*t[:2]) and _unit(t[2])),
    _spec("thm1.1-arsinh", _T, ("p", "q", "x"), "p,q > 1; x in (0,1)",
          ("arsinh lower L", "arsinh upper U"),
          _ev_thm11_arsinh, _pts_pqx, lambda t: _pq_ok(*t[:2]) and _unit(t[2])),
    _spec("thm1.2-pi", _T, ("p", "q"), "p,q > 1",
          ("pi lower alpha(1/100)", "pi upper alpha(1/30)"),
          _ev_thm12_pi, _pts_pq, lambda t: _pq_ok(*t)),
    _spec("thm1.2-dual", _T, ("p",), "p > 1; target pi_{p',p}",
          ("dual lower", "dual upper"),
          _ev_thm12_dual, _pts_p, lambda t: t[0] > 1.0),
    _spec("thm1.2-conj", _T, ("p",), "p > 1; target pi_{p,p'}",
          ("conj lower", "conj upper"),
          _ev_thm12_conj, _pts_p, lambda t: t[0] > 1.0),
    _spec("lem2.1-k-mono", _L, ("p", "q", "x", "k1", "k2"), "p,q > 1; x in (0,1); 0 < k1 < k2",
          ("arcsin(x^k)^(1/k) decreasing", "arsinh(x^k)^(1/k) increasing"),
          _ev_k_mono, lambda g: _pts_k_pairs(g, 0.0),
          lambda t: _pq_ok(*t[:2]) and _unit(t[2]) and 0.0 < t[3] < t[4]),
    _spec("lem2.1-k-scale", _L, ("p", "q", "x", "k1", "k2"), "p,q > 1; x in (0,1); 1 < k1 < k2",
          ("k arcsin(x/k) decreasing",),
          _ev_k_scale, lambda g: _pts_k_pairs(g, 1.0),
          lambda t: _pq_ok(*t[:2]) and _unit(t[2]) and 1.0 < t[3] < t[4]),
    _spec("lem2.1-chains", _L, ("p", "q", "x", "k"), "p,q > 1; x in (0,1); k >= 1",
          ("arcsin root chain left", "arcsin root chain right", "arsinh root chain left",
           "arsinh root chain right", "arcsin(x/k) <= arcsin(x)/k"),
          _ev_chains, _pts_pqxk, lambda t: _pq_ok(*t[:2]) and _unit(t[2]) and t[3] >= 1.0),
    _spec("thm2.2-mult", _T, ("p", "q", "r", "s"), "p,q > 1; r,s in (0,1)",
          ("arcsin(rs) <= geometric mean", "geometric mean <= product",
           "arsinh product <= geometric mean", "geometric mean <= arsinh(rs)"),
          _ev_mult, _pts_pqrs, lambda t: _pq_ok(*t[:2]) and _unit(*t[2:])),
    _spec("lem-g1g2", _L, ("p", "q", "k", "x1", "x2"), "p,q > 1; k > 0, k != 1; 0 < x1 < x2 < 1",
          ("g1 monotone in x", "g2 monotone in x", "arcsin power bound", "arsinh power bound"),
          _ev_g1g2, _pts_g1g2,
          lambda t: _pq_ok(*t[:2]) and t[2] > 0.0 and t[2] != 1.0 and 0.0 < t[3] < t[4] < 1.0),
    _spec("lem-ratio-power", _L, ("p", "q", "k", "r", "s"), "p,q,k > 1; 0 < s <= r < 1",
          ("arcsin ratio power", "arsinh ratio power"),
          _ev_ratio_power, lambda g: _pts_pqkrs(g, lambda k: k > 1.0),
          lambda t: _pq_ok(*t[:2]) and t[2] > 1.0 and 0.0 < t[4] <= t[3] < 1.0),
    _spec("lem-sin-ratio", _L, ("p", "q", "k", "r", "s"), "p,q > 1; k > 0, k != 1; 0 < s <= r < 1",
          ("sin ratio power", "sinh ratio power"),
          _ev_sin_ratio, lambda g: _pts_pqkrs(g, lambda k: k > 0.0 and k != 1.0),
          lambda t: _pq_ok(*t[:2]) and t[2] > 0.0 and t[2] != 1.0 and 0.0 < t[4] <= t[3] < 1.0),
    _spec("lem-midpoint", _L, ("p", "q", "r", "s"), "p,q > 1; r,s in (0,1)",
          ("arcsin midpoint convex", "sin midpoint concave",
           "arsinh midpoint concave", "sinh midpoint convex"),
          _ev_midpoint, _pts_pqrs, lambda t: _pq_ok(*t[:2]) and _unit(*t[2:])),
    _spec("conj-sin-gg", _C, ("p", "q", "r", "s"), "p,q > 1; r,s in (0,1)",
          ("sin geometric mean", "sinh geometric mean"),
          _ev_conj, _pts_pqrs, lambda t: _pq_ok(*t[:2]) and _unit(*t[2:])),
    _spec("lem-subadditive", _L, ("p", "q", "r", "s"),
          "p,q > 1; sin: r,s in (0, pi_pq/4); sinh: r,s > 0 with r+s <= sinh domain end",
          ("sin subadditive", "sinh superadditive"),
          _ev_subadd, lambda g: (t for t in _pts_pqrs(g) if any(_subadd_parts(*t))),
          lambda t: _pq_ok(*t[:2]) and min(t[2:]) > 0.0 and any(_subadd_parts(*t))),
    _spec("order-asin-ash", _L, ("p", "q", "x"), "p,q > 1; x in (0,1)",
          ("arsinh < arcsin", "sin < sinh"),
          _ev_order, lambda g: _pts_pqx(g, endpoint=False),
          lambda t: _pq_ok(*t[:2]) and _unit(t[2])),
    _spec("lem-ratio-mono", _L, ("p", "q", "r", "s"), "p,q > 1; 0 < s <= r < 1",
          ("arcsin(x)/x increasing", "arsinh over (x^p/(1+x^q))^(1/p) increasing",
           "arsinh(x)/x decreasing"),
          _ev_ratio_mono, _pts_pqrs, lambda t: _pq_ok(*t[:2]) and 0.0 < t[3] <= t[2] < 1.0),
    _spec("lem3.1-hyp", _L, ("p", "q", "x", "x_next"), "p,q > 1; x in (0,1)",
          ("Euler transformation", "F(-a,b;c;x) < 1 - abx/c", "F(a,..) + F(-a,..) > 2",
           "F <= Gauss sum", "(F(a,b;a+b;x)-1)/log(1/(1-x)) increasing with its limits"),
          _ev_hyp, _pts_hyp, lambda t: _pq_ok(*t[:2]) and _unit(t[2])),
    _spec("pfaff-identity", _I, ("p", "q", "x"), "p,q > 1; x in (0, 0.9)",
          ("Pfaff transformation",),
          _ev_pfaff, _pts_pfaff, lambda t: _pq_ok(*t[:2]) and 0.0 < t[2] < 0.9),
    _spec("lem3.2-carlson", _L, ("p", "q", "x"), "p,q > 1; x < 1",
          ("Carlson lower", "Carlson upper"),
          _ev_carlson, _pts_carlson, lambda t: _pq_ok(*t[:2]) and t[2] < 1.0),
    _spec("lem3.3-gamma", _L, ("variant", "args"), "variant-specific",
          ("sixth-root Gamma(1+x) bounds", "Gamma(x+1)/Gamma(x+s) bounds",
           "Gamma(b)/Gamma(a) upper", "Gamma(x+s)/(x^s Gamma(x)) bounds"),
          _ev_gamma, _pts_gamma, lambda t: _gamma_ok(t)),
    _spec("egl-identity", _I, ("x",), "p = 4/3, q = 4; x in (0, pi_{4/3,4}/4)",
          ("sin doubling formula",),
          _ev_egl, _pts_egl,
          lambda t: 0.0 < t[0] < 0.5 * pq_constants(EGL_PQ).pi_half),
    _spec("ode-residual", _I, ("p", "q", "f"), "p,q > 1; y = f pi_pq/2 with f in [0.1, 0.9]",
          ("(phi_p(u'))' + lambda* phi_q(u) = 0",),
          _ev_ode, _pts_ode, lambda t: _pq_ok(*t[:2]) and 0.1 <= t[2] <= 0.9, tol=1e-5),
)


def _gamma_ok(t) -> bool:
    try:
        bounds.gamma_bound(t[0], *t[1:])
    except (DomainError, ValueError, TypeError):
        return False
    return True


_BY_ID = {s.id: s for s in _REGISTRY}
assert len(_BY_ID) == len(_REGISTRY)


def list_predicates() -> list[PredicateSpec]:
    """All registered predicate families in stable order."""
    return list(_REGISTRY)


def lookup(id: str) -> PredicateSpec:
    try:
        return _BY_ID[id]
    except KeyError:
        raise UnknownPredicate(id) from None


def _evaluate(spec: PredicateSpec, values: _Values, point: tuple) -> tuple[float, float]:
    if not spec.in_domain(point):
        raise DomainViolation(f"{point!r} is outside the domain of {spec.id}: {spec.domain}")
    return spec.evaluate(values, point)


def evaluate_predicate(id: str, point: tuple) -> float:
    """Signed slack of predicate ``id`` at ``point`` (positive = holds)."""
    spec = lookup(id)
    return _evaluate(spec, _Values(), tuple(point))[0]


def _normalised(spec: PredicateSpec, slack: float, scale: float) -> float:
    if spec.klass is PredicateClass.IDENTITY:
        return slack / (spec.tol * scale)
    return slack / (1.0 + scale)


def sweep(id: str, grid: GridSpec | None = None, eps_rel: float = 1e-9) -> PredicateReport:
    """Evaluate predicate ``id`` over ``grid`` and reduce to a report.

    Theorems and lemmas pass when every point has
    ``slack >= -eps_rel * (1 + scale)``; identities when every residual is
    within ``tol * scale``.  Conjectures never fail: their status is
    ``NO_COUNTEREXAMPLE`` or ``FINDING`` with the worst point as witness.
    """
    spec = lookup(id)
    if grid is None:
        grid = GridSpec()
    if not 1e-12 <= eps_rel <= 1e-6:
        raise DomainError(f"eps_rel must lie in [1e-12, 1e-6], got {eps_rel!r}")
    values = _Values()
    n = 0
    worst = None
    for point in spec.points(grid):
        slack, scale = _evaluate(spec, values, point)
        key = _normalised(spec, slack, scale)
        if worst is None or key < worst[0]:
            worst = (key, slack, scale, point)
        n += 1
    if worst is None:
        return PredicateReport(spec.id, spec.klass, 0, math.inf, 0.0, (), True, "VACUOUS")

    key, slack, scale, point = worst
    limit = -1.0 if spec.klass is PredicateClass.IDENTITY else -eps_rel
    holds = key >= limit
    if spec.klass is PredicateClass.CONJECTURE:
        # strict violation beyond roundoff counts as a counterexample
        return PredicateReport(spec.id, spec.klass, n, slack, scale, point, True,
                               "NO_COUNTEREXAMPLE" if holds else "FINDING")
    return PredicateReport(spec.id, spec.klass, n, slack, scale, point, holds,
                           "PASS" if holds else "FAIL")


def run_all(grid: GridSpec | None = None, eps_rel: float = 1e-9,
            ids: Iterable[str] | None = None) -> list[PredicateReport]:
    """Sweep every predicate (or ``ids``) in registry order."""
    wanted = None if ids is None else set(ids)
    if wanted is not None:
        for i in wanted:
            lookup(i)
    return [sweep(s.id, grid, eps_rel) for s in _REGISTRY if wanted is None or s.id in wanted]
