import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gentrig.errors import DomainError
from gentrig.pqtrig import (
    PqParams,
    arccos_eval,
    arccos_pq,
    arcsin_eval,
    arcsin_pq,
    arcsin_tail,
    arsinh_eval,
    arsinh_pq,
    m_pq,
    pi_pq,
    pq_constants,
)
from gentrig.special_fn import Method

mpmath.mp.dps = 30
exps = st.floats(1.05, 12.0)

TABLE1 = {
    0.0: (0.0000, 1.2748, 0.0000),
    0.25: (0.2504, 1.2048, 0.2496),
    0.5: (0.5066, 1.0688, 0.4940),
    0.75: (0.7887, 0.8536, 0.7227),
    1.0: (1.2748, 0.0000, 0.9262),
}


def mp_arcsin(p, q, x):
    return float(mpmath.quad(lambda t: (1 - t ** q) ** (-mpmath.mpf(1) / p), [0, x]))


def mp_arsinh(p, q, x):
    return float(mpmath.quad(lambda t: (1 + t ** q) ** (-mpmath.mpf(1) / p), [0, x]))


def test_params_validate():
    with pytest.raises(DomainError):
        PqParams(1.0, 2.0)
    with pytest.raises(DomainError):
        PqParams(2.0, float("nan"))
    assert PqParams(3.0, 2.0).p_conj == pytest.approx(1.5)


def test_classical_constants():
    pq = PqParams(2.0, 2.0)
    assert pi_pq(pq) == pytest.approx(math.pi, abs=1e-13)
    assert m_pq(pq) == pytest.approx(math.asinh(1.0), abs=1e-13)
    assert pq_constants(pq).lambda_star == 1.0


def test_reference_constants():
    pq = PqParams(2.5, 3.0)
    assert pi_pq(pq) / 2 == pytest.approx(1.2748, abs=5e-5)
    assert m_pq(pq) == pytest.approx(0.9262, abs=5e-5)
    assert pq_constants(pq).lambda_star == pytest.approx(3.0 * 1.5 / 2.5)


@pytest.mark.parametrize("x", sorted(TABLE1))
def test_table1_row(x):
    pq = PqParams(2.5, 3.0)
    got = (arcsin_pq(pq, x), arccos_pq(pq, x), arsinh_pq(pq, x))
    for g, want in zip(got, TABLE1[x]):
        assert abs(g - want) <= 5e-5


@settings(max_examples=40, deadline=None)
@given(exps, exps, st.floats(0.0, 1.0))
def test_arcsin_against_mpmath(p, q, x):
    assert arcsin_pq(PqParams(p, q), x) == pytest.approx(mp_arcsin(p, q, x), abs=1e-11)


@settings(max_examples=40, deadline=None)
@given(exps, exps, st.floats(0.0, 8.0))
def test_arsinh_against_mpmath(p, q, x):
    assert arsinh_pq(PqParams(p, q), x) == pytest.approx(mp_arsinh(p, q, x), abs=1e-11, rel=1e-12)


@settings(max_examples=40, deadline=None)
@given(exps, exps, st.floats(0.0, 1.0))
def test_arccos_is_arcsin_of_complement(p, q, x):
    pq = PqParams(p, q)
    assert arccos_pq(pq, x) == pytest.approx(arcsin_pq(pq, (1 - x ** p) ** (1 / q)), rel=1e-13, abs=1e-15)


@settings(max_examples=40, deadline=None)
@given(exps, exps, st.floats(0.5, 1.0))
def test_tail_complements_arcsin(p, q, xq):
    # w = 1 - x^q stays in [0, 1/2], where the tail is well conditioned
    pq = PqParams(p, q)
    x = xq ** (1 / q)
    w = 1 - xq
    assert arcsin_pq(pq, x) + arcsin_tail(pq, w) == pytest.approx(pi_pq(pq) / 2, abs=1e-11)


def test_arcsin_monotone(pq):
    xs = [i / 200 for i in range(201)]
    vals = [arcsin_pq(pq, x) for x in xs]
    assert all(b > a for a, b in zip(vals, vals[1:]))


def test_method_tags():
    pq = PqParams(2.5, 3.0)
    assert arcsin_eval(pq, 0.5).method is Method.DIRECT_SERIES
    assert arcsin_eval(pq, 1.0).method is Method.ENDPOINT_GAUSS
    assert arsinh_eval(pq, 2.0).method is Method.PFAFF_SERIES
    assert arccos_eval(pq, 0.5).value > 0


@pytest.mark.parametrize("x", [-0.1, 1.5, float("nan")])
def test_arcsin_domain(x):
    with pytest.raises(DomainError):
        arcsin_pq(PqParams(2.0, 2.0), x)


def test_arsinh_domain():
    with pytest.raises(DomainError):
        arsinh_pq(PqParams(2.0, 2.0), -1.0)
