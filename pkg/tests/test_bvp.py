import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gtfkit import DomainError, GeneralProblem, NonlocalProblem, ParamPair, conjugate, pi_pq, sin_pq
from gtfkit.bvp import (
    general_extremum,
    general_residual,
    general_solution,
    median_gap,
    median_mass,
    median_trichotomy,
    nonlocal_residual,
    phi_extremum,
    phi_r,
    phi_r_prime,
)

r_values = st.floats(1.01, 1.99)


@settings(max_examples=50, deadline=None)
@given(r_values, st.floats(0.1, 10.0))
def test_extremum_left_of_midpoint(r, H):
    ext = phi_extremum(NonlocalProblem(r, H))
    assert ext.location < H / 2
    assert ext.midpoint_relation == "below"
    assert phi_r(ext.location, NonlocalProblem(r, H)) == pytest.approx(ext.value, rel=1e-13)


@pytest.mark.parametrize("r", [1.2, 1.5, 1.9])
def test_extremum_against_dense_grid(r):
    prob = NonlocalProblem(r)
    x = np.linspace(0, 1, 100_001)
    phi = np.asarray(phi_r(x, prob))
    ext = phi_extremum(prob)
    assert abs(x[np.argmax(phi)] - ext.location) <= 2e-5
    assert 0 <= ext.value - phi.max() <= 1e-8


@pytest.mark.parametrize("r", [1.2, 1.5, 1.9])
def test_boundary_values(r):
    prob = NonlocalProblem(r)
    assert phi_r(0.0, prob) == 0.0
    assert phi_r(1.0, prob) == pytest.approx(0.0, abs=1e-15)


@pytest.mark.parametrize("r", [1.2, 1.5, 1.9])
def test_residual_second_order(r):
    prob = NonlocalProblem(r)
    coarse, fine = nonlocal_residual(prob, 2000), nonlocal_residual(prob, 4000)
    assert coarse <= 1e-4
    assert 2 <= coarse / fine <= 8


def test_residual_detects_wrong_scale():
    assert nonlocal_residual(NonlocalProblem(1.5), 2000, scale=1.01) >= 1e-2


@pytest.mark.parametrize("r", [1.3, 1.7])
def test_slope_matches_finite_difference(r):
    prob = NonlocalProblem(r)
    x = np.linspace(0.1, 0.9, 9)
    h = 1e-6
    fd = (np.asarray(phi_r(x + h, prob)) - np.asarray(phi_r(x - h, prob))) / (2 * h)
    np.testing.assert_allclose(phi_r_prime(x, prob), fd, atol=1e-7)


def test_peak_tends_to_inverse_pi():
    # (2 - r) * max phi_r -> 1/pi as r -> 2
    vals = [(2 - r) * phi_extremum(NonlocalProblem(r)).value for r in (1.9, 1.99, 1.999)]
    gaps = [abs(v - 1 / np.pi) for v in vals]
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] < 1e-2


@pytest.mark.parametrize(
    "p, q, relation",
    [(3.0, 2.0, "below"), (2.0, 3.0, "above"), (2.5, 2.5, "equal"), (9.0, 1.2, "below")],
)
def test_general_trichotomy(p, q, relation):
    assert general_extremum(GeneralProblem(p, q)).midpoint_relation == relation


@pytest.mark.parametrize("p, q", [(3.0, 2.0), (2.0, 3.0), (1.5, 1.5)])
def test_general_residual(p, q):
    prob = GeneralProblem(p, q)
    assert general_residual(prob, 2000) <= 1e-4
    assert general_solution(0.0, prob) == 0.0


def test_general_reduces_to_nonlocal():
    # with p = r* and q = r the local solution is a multiple of phi_r
    r = 1.4
    x = np.linspace(0, 1, 11)
    u = np.asarray(general_solution(x, GeneralProblem(conjugate(r), r)))
    phi = np.asarray(phi_r(x, NonlocalProblem(r)))
    np.testing.assert_allclose(phi, r / (2 - r) * u, rtol=1e-13, atol=1e-16)


@pytest.mark.parametrize("p, q, expected", [(3.0, 2.0, "gt"), (1.5, 2.0, "lt"), (2.0, 2.0, "eq")])
def test_median_trichotomy(p, q, expected):
    # sin(pi/4) vs the threshold: sign(gap) = sign(p* - q)
    assert median_trichotomy(ParamPair(p, q)) == expected


@settings(max_examples=100, deadline=None)
@given(st.floats(1.1, 10.0), st.floats(1.1, 10.0))
def test_median_gap_sign(p, q):
    pp = ParamPair(p, q)
    if abs(pp.p_star - q) < 1e-6:
        return
    assert np.sign(median_gap(pp)) == np.sign(pp.p_star - q)
    assert (median_mass(pp) < 0.5) == (pp.p_star > q)


@pytest.mark.parametrize("p", [1.2, 2.0, 5.0])
def test_median_diagonal(p):
    pp = ParamPair(p, conjugate(p))
    assert sin_pq(pi_pq(pp) / 4, pp) == pytest.approx(2 ** (-1 / pp.p_star), abs=1e-12)


@pytest.mark.parametrize("r", [1.0, 2.0, 0.5])
def test_nonlocal_range(r):
    with pytest.raises(DomainError):
        NonlocalProblem(r)


def test_x_outside_interval():
    with pytest.raises(DomainError):
        phi_r(1.5, NonlocalProblem(1.5))
