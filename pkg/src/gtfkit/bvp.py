"""Closed-form positive solutions of two boundary value problems.

The nonlocal problem on ``(0, H)``::

    phi' - phi'^2 + phi phi'' + (2/H) int_0^H phi'(t)^2 dt = 0,  phi(0) = phi(H) = 0

has the one-parameter family of positive solutions

    phi_r(x) = 2H / ((2 - r) pi_r) * sin_r(theta) * cos_r(theta)^(r - 1),
    theta = pi_r x / (2H),  1 < r < 2,

and the local problem

    (p - q) u' - p q u'^2 + (p + q) u u'' + 1 = 0,  u(0) = u(H) = 0

is solved by the same construction with the pair ``(p*, q)``. Each solution
has a single interior maximum whose position relative to ``H/2`` is decided
by where ``p* / (p* + q)`` sits against the median of a beta distribution.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np
from scipy.integrate import simpson

from .config import DEFAULT, DomainError, NumericsConfig
from .gtf import ParamPair, asin_pq, conjugate, pi_pq, sin_cos, sin_pq
from .special import _ibeta_pair, _out

MidpointRelation = Literal["below", "equal", "above"]
Comparison = Literal["lt", "eq", "gt"]

# residual checks stay clear of the endpoint singularities of phi''
WINDOW = (0.05, 0.95)


@dataclass(frozen=True)
class NonlocalProblem:
    r: float
    H: float = 1.0

    def __post_init__(self) -> None:
        if not 1 < self.r < 2:
            raise DomainError(f"r must lie in (1, 2), got {self.r}")
        if not self.H > 0:
            raise DomainError(f"H must be positive, got {self.H}")

    @property
    def pair(self) -> ParamPair:
        return ParamPair(self.r, self.r)


@dataclass(frozen=True)
class GeneralProblem:
    p: float
    q: float
    H: float = 1.0

    def __post_init__(self) -> None:
        if not (self.p > 1 and self.q > 1):
            raise DomainError(f"need p, q > 1, got p={self.p}, q={self.q}")
        if not self.H > 0:
            raise DomainError(f"H must be positive, got {self.H}")

    @property
    def pair(self) -> ParamPair:
        """The pair ``(p*, q)`` whose GTFs build the solution."""
        return ParamPair(conjugate(self.p), self.q)


@dataclass(frozen=True)
class ExtremumReport:
    location: float
    value: float
    midpoint_relation: MidpointRelation


def _relation(location: float, H: float) -> MidpointRelation:
    tol = 1e-9 * H
    if abs(location - 0.5 * H) <= tol:
        return "equal"
    return "below" if location < 0.5 * H else "above"


def _grid_check(x, H):
    x = np.asarray(x, dtype=float)
    if np.any(~((x >= 0) & (x <= H))):
        raise DomainError(f"x must lie in [0, {H}]")
    return x


def phi_r(x, prob: NonlocalProblem, config: NumericsConfig = DEFAULT):
    """Positive solution of the nonlocal problem with parameter ``r``."""
    x = _grid_check(x, prob.H)
    r, H = prob.r, prob.H
    pi_r = pi_pq(prob.pair)
    s, c = sin_cos(pi_r * x / (2 * H), prob.pair, config)
    return _out(2 * H / ((2 - r) * pi_r) * np.asarray(s) * np.asarray(c) ** (r - 1))


def phi_r_prime(x, prob: NonlocalProblem, config: NumericsConfig = DEFAULT):
    """Exact derivative ``(1 - r sin_r(theta)^r) / (2 - r)``."""
    x = _grid_check(x, prob.H)
    theta = pi_pq(prob.pair) * x / (2 * prob.H)
    s = np.asarray(sin_pq(theta, prob.pair, config))
    return _out((1 - prob.r * s**prob.r) / (2 - prob.r))


def phi_extremum(prob: NonlocalProblem, config: NumericsConfig = DEFAULT) -> ExtremumReport:
    """Location and value of the maximum of ``phi_r``; always left of ``H/2``."""
    r, H = prob.r, prob.H
    pi_r = pi_pq(prob.pair)
    location = 2 * H / pi_r * asin_pq(r ** (-1 / r), prob.pair, config)
    rs = conjugate(r)
    value = 2 * H / ((2 - r) * pi_r) * r ** (-1 / r) * rs ** (-1 / rs)
    return ExtremumReport(location, value, _relation(location, H))


def nonlocal_residual(
    prob: NonlocalProblem,
    grid_n: int = 2000,
    *,
    scale: float = 1.0,
    config: NumericsConfig = DEFAULT,
) -> float:
    """Max residual of the nonlocal equation on the interior window.

    ``phi'`` and ``phi''`` are central differences on ``grid_n + 1`` uniform
    points; the integral term uses Simpson's rule on the exact ``phi'^2``.
    ``scale`` multiplies the solution before it is tested, which is how the
    residual's ability to detect a wrong profile is checked.
    """
    if grid_n < 100:
        raise DomainError("grid_n must be >= 100")
    H = prob.H
    x = np.linspace(0.0, H, grid_n + 1)
    h = H / grid_n
    f = scale * np.asarray(phi_r(x, prob, config))
    integral = (2 / H) * simpson((scale * np.asarray(phi_r_prime(x, prob, config))) ** 2, x=x)
    d1 = (f[2:] - f[:-2]) / (2 * h)
    d2 = (f[2:] - 2 * f[1:-1] + f[:-2]) / h**2
    res = d1 - d1**2 + f[1:-1] * d2 + integral
    xi = x[1:-1]
    inside = (xi >= WINDOW[0] * H) & (xi <= WINDOW[1] * H)
    return float(np.max(np.abs(res[inside])))


def general_solution(x, prob: GeneralProblem, config: NumericsConfig = DEFAULT):
    """Positive solution ``u`` of the local problem with exponents ``(p, q)``."""
    x = _grid_check(x, prob.H)
    pair = prob.pair
    P = pi_pq(pair)
    s, c = sin_cos(P * x / (2 * prob.H), pair, config)
    return _out(2 * prob.H / (prob.q * P) * np.asarray(c) ** (pair.p - 1) * np.asarray(s))


def general_residual(
    prob: GeneralProblem, grid_n: int = 2000, config: NumericsConfig = DEFAULT
) -> float:
    """Max of ``|(p-q)u' - pq u'^2 + (p+q) u u'' + 1|`` on the interior window."""
    if grid_n < 100:
        raise DomainError("grid_n must be >= 100")
    p, q, H = prob.p, prob.q, prob.H
    x = np.linspace(0.0, H, grid_n + 1)
    h = H / grid_n
    u = np.asarray(general_solution(x, prob, config))
    d1 = (u[2:] - u[:-2]) / (2 * h)
    d2 = (u[2:] - 2 * u[1:-1] + u[:-2]) / h**2
    res = (p - q) * d1 - p * q * d1**2 + (p + q) * u[1:-1] * d2 + 1
    xi = x[1:-1]
    inside = (xi >= WINDOW[0] * H) & (xi <= WINDOW[1] * H)
    return float(np.max(np.abs(res[inside])))


def general_extremum(prob: GeneralProblem, config: NumericsConfig = DEFAULT) -> ExtremumReport:
    """Maximum of the local-problem solution.

    Left of ``H/2`` when ``p > q``, at ``H/2`` when ``p == q`` and right of
    it when ``q > p``.
    """
    p, q, H = prob.p, prob.q, prob.H
    pair = prob.pair
    P = pi_pq(pair)
    location = 2 * H / P * asin_pq((p / (p + q)) ** (1 / q), pair, config)
    value = 2 * H / (q * P) * (q / (p + q)) ** (1 / p) * (p / (p + q)) ** (1 / q)
    return ExtremumReport(location, value, _relation(location, H))


def median_gap(pp: ParamPair, config: NumericsConfig = DEFAULT) -> float:
    """``sin_pq(pi_pq / 4) - (p* / (p* + q))^(1/q)``; its sign is that of ``p* - q``."""
    ps, q = pp.p_star, pp.q
    return sin_pq(0.25 * pi_pq(pp), pp, config) - (ps / (ps + q)) ** (1 / q)


def median_mass(pp: ParamPair, config: NumericsConfig = DEFAULT) -> float:
    """``I_X(1/q, 1/p*)`` at ``X = p* / (p* + q)``: below 1/2 iff ``p* > q``."""
    ps, q = pp.p_star, pp.q
    val, _ = _ibeta_pair(ps / (ps + q), q / (ps + q), 1 / q, 1 / ps, config.max_iter)
    return float(val)


def median_trichotomy(pp: ParamPair, config: NumericsConfig = DEFAULT, tol: float = 1e-10) -> Comparison:
    """Compare ``(p* / (p* + q))^(1/q)`` with ``sin_pq(pi_pq / 4)``."""
    gap = median_gap(pp, config)
    if abs(gap) <= tol:
        return "eq"
    return "lt" if gap > 0 else "gt"
