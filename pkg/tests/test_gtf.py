import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gtfkit import DomainError, ParamPair, asin_pq, conjugate, cos_pq, gtf_point, pi_pq, sin_cos, sin_pq
from gtfkit.gtf import laplacian_residual, multiple_angle_residual

# generalized pi and asin from mpmath (beta function and direct quadrature)
PI_REF = [
    (2.0, 4.0, 2.6220575542921198),
    (3.0, 2.0, 2.5871095592297906),
    (1.5, 6.0, 2.8043642106509086),
    (10.0, 1.1, 2.2083998581501125),
]
ASIN_REF = [
    (3.0, 2.0, 0.7, 0.74862037045686106),
    (1.5, 6.0, 0.9, 0.96213853353018289),
    (2.0, 4.0, 0.5, 0.50320944317733089),
]

exponent = st.floats(1.1, 10.0)


@pytest.mark.parametrize("p, q, expected", PI_REF)
def test_pi_reference(p, q, expected):
    assert pi_pq(ParamPair(p, q)) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("p, q, x, expected", ASIN_REF)
def test_asin_reference(p, q, x, expected):
    pp = ParamPair(p, q)
    assert asin_pq(x, pp) == pytest.approx(expected, rel=1e-13)
    assert sin_pq(expected, pp) == pytest.approx(x, rel=1e-13)


def test_classical_case(classical):
    x = np.linspace(0, np.pi, 257)
    np.testing.assert_allclose(sin_pq(x, classical), np.sin(x), atol=1e-14)
    xh = x[x <= np.pi / 2]
    np.testing.assert_allclose(cos_pq(xh, classical), np.cos(xh), atol=1e-14)
    assert pi_pq(classical) == pytest.approx(np.pi, rel=1e-15)


@pytest.mark.parametrize("p, q", [(1.1, 1.1), (1.1, 10.0), (10.0, 1.1), (10.0, 10.0), (2.0, 3.0)])
def test_endpoint_values(p, q):
    pp = ParamPair(p, q)
    P = pi_pq(pp)
    assert sin_pq(0.0, pp) == 0.0
    assert sin_pq(P / 2, pp) == 1.0
    assert sin_pq(P, pp) == pytest.approx(0.0, abs=1e-15)
    assert cos_pq(0.0, pp) == 1.0
    assert cos_pq(P / 2, pp) == 0.0
    assert asin_pq(1.0, pp) == pytest.approx(P / 2, rel=1e-15)


@settings(max_examples=100, deadline=None)
@given(exponent, exponent, st.floats(0.0, 1.0))
def test_pythagorean_identity(p, q, frac):
    pp = ParamPair(p, q)
    s, c = sin_cos(frac * pi_pq(pp), pp)
    assert c**p + s**q == pytest.approx(1.0, abs=1e-13)


@settings(max_examples=100, deadline=None)
@given(exponent, exponent, st.floats(0.0, 0.5))
def test_reflection_symmetry(p, q, frac):
    pp = ParamPair(p, q)
    P = pi_pq(pp)
    assert sin_pq(P - frac * P, pp) == pytest.approx(sin_pq(frac * P, pp), abs=1e-14)


@settings(max_examples=100, deadline=None)
@given(exponent, exponent, st.floats(0.0, 1.0))
def test_asin_sin_roundtrip(p, q, y):
    pp = ParamPair(p, q)
    assert sin_pq(asin_pq(y, pp), pp) == pytest.approx(y, abs=1e-13)


@pytest.mark.parametrize("p, q", [(1.5, 3.0), (4.0, 1.5), (2.5, 2.5)])
def test_sin_is_increasing_on_half_period(p, q):
    pp = ParamPair(p, q)
    s = sin_pq(np.linspace(0, pi_pq(pp) / 2, 2001), pp)
    assert np.all(np.diff(s) >= 0)


@pytest.mark.parametrize("p, q", [(1.5, 3.0), (4.0, 1.5)])
def test_cos_is_derivative_of_sin(p, q):
    pp = ParamPair(p, q)
    x = np.linspace(0.1, 0.9, 9) * pi_pq(pp) / 2
    h = 1e-6
    fd = (np.asarray(sin_pq(x + h, pp)) - np.asarray(sin_pq(x - h, pp))) / (2 * h)
    np.testing.assert_allclose(cos_pq(x, pp), fd, atol=1e-8)


@pytest.mark.parametrize("r", [1.2, 2.0, 3.0, 7.0])
def test_multiple_angle(r):
    x = np.linspace(0, pi_pq(ParamPair(conjugate(r), r)) / 2, 101)
    assert np.max(multiple_angle_residual(x, r)) <= 1e-12


@pytest.mark.parametrize("p, q", [(1.25, 1.1), (2.0, 2.0), (3.0, 1.5), (10.0, 10.0)])
def test_p_laplacian_equation(p, q):
    assert laplacian_residual(ParamPair(p, q)) <= 1e-5


def test_gtf_point_sign_past_quarter_period():
    pp = ParamPair(3.0, 2.0)
    P = pi_pq(pp)
    left, right = gtf_point(0.3 * P, pp), gtf_point(0.7 * P, pp)
    assert left.s == pytest.approx(right.s, rel=1e-14)
    assert right.c == pytest.approx(-left.c, rel=1e-13)


@pytest.mark.parametrize("p, q", [(1.0, 2.0), (2.0, 0.5), (float("nan"), 2.0)])
def test_param_pair_validation(p, q):
    with pytest.raises(DomainError):
        ParamPair(p, q)


def test_domain_errors():
    pp = ParamPair(2.0, 3.0)
    with pytest.raises(DomainError):
        sin_pq(-0.1, pp)
    with pytest.raises(DomainError):
        cos_pq(pi_pq(pp), pp)
    with pytest.raises(DomainError):
        asin_pq(1.5, pp)
