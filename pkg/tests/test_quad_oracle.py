import math

import mpmath
import pytest

from gentrig.errors import DomainError
from gentrig.pqtrig import PqParams, arcsin_pq, arsinh_pq, pi_pq
from gentrig.quad_oracle import arcsin_quad, arsinh_quad, hyp2f1_euler_integral, integrate_de


def test_polynomial_exact():
    r = integrate_de(lambda t: t * t, 0.0, 3.0)
    assert r.value == pytest.approx(9.0, rel=1e-14)


def test_endpoint_singularity():
    # integral of t^{-1/2} over (0, 1) is 2
    r = integrate_de(lambda t: t ** -0.5, 0.0, 1.0)
    assert r.value == pytest.approx(2.0, rel=1e-12)


def test_gaps_mode_gives_endpoint_distances():
    # (1 - t)^{-0.9} has an integral of 10 and needs an accurate 1 - t
    r = integrate_de(lambda t, lo, hi: hi ** -0.9, 0.0, 1.0, gaps=True, tol=1e-10)
    assert r.value == pytest.approx(10.0, rel=1e-9)


def test_bad_tolerance_rejected():
    with pytest.raises(DomainError):
        integrate_de(math.sin, 0.0, 1.0, tol=1e-20)


def test_levels_reported():
    r = integrate_de(math.exp, 0.0, 1.0)
    assert 4 <= r.levels_used <= 12


@pytest.mark.parametrize("x", [0.1, 0.5, 0.9, 0.999, 1.0])
def test_arcsin_quad_matches_series(pq, x):
    assert arcsin_quad(pq, x).value == pytest.approx(arcsin_pq(pq, x), abs=1e-10)


def test_arcsin_quad_endpoint_is_half_pi(pq):
    assert arcsin_quad(pq, 1.0).value == pytest.approx(pi_pq(pq) / 2, abs=1e-10)


@pytest.mark.parametrize("x", [0.2, 1.0, 5.0])
def test_arsinh_quad_matches_series(pq, x):
    assert arsinh_quad(pq, x).value == pytest.approx(arsinh_pq(pq, x), abs=1e-10)


def test_arsinh_quad_against_mpmath():
    p, q, x = 2.5, 3.0, 0.75
    ref = mpmath.quad(lambda t: (1 + t ** q) ** (-1 / p), [0, x])
    assert arsinh_quad(PqParams(p, q), x).value == pytest.approx(float(ref), abs=1e-12)


def test_euler_integral_against_mpmath():
    a, b, c, x = 0.7, 0.4, 1.9, 0.999
    v = hyp2f1_euler_integral(a, b, c, x, 1 - x).value
    assert v == pytest.approx(float(mpmath.hyp2f1(a, b, c, x)), rel=1e-12)
