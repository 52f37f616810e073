"""Generalized trigonometric functions with two parameters.

``sin_pq`` is the inverse of

    asin_pq(x) = int_0^x (1 - t^q)^(-1/p) dt = (1/q) B_{x^q}(1/q, 1/p*),

on ``[0, pi_pq / 2]``, extended to ``[0, pi_pq]`` by reflection about the
quarter period. Writing ``y = sin_pq(x)^q`` turns the inversion into
``I_y(1/q, 1/p*) = 2 x / pi_pq``, which is solved with the inverse beta
kernel. The same solve returns ``1 - y`` without cancellation, so
``cos_pq = (1 - y)^(1/p)`` stays accurate right up to the quarter period.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import DEFAULT, DomainError, NumericsConfig
from .special import BetaArgs, _ibeta_inv_pair, _ibeta_pair, _out, beta


@dataclass(frozen=True)
class ParamPair:
    """Exponent pair ``(p, q)``, both strictly greater than one."""

    p: float
    q: float

    def __post_init__(self) -> None:
        if not (self.p > 1 + 1e-9 and self.q > 1 + 1e-9):
            raise DomainError(f"need p, q > 1, got p={self.p}, q={self.q}")

    @property
    def p_star(self) -> float:
        return self.p / (self.p - 1)

    @property
    def q_star(self) -> float:
        return self.q / (self.q - 1)

    @property
    def shapes(self) -> BetaArgs:
        """Beta shapes ``(1/q, 1/p*)`` behind every function of this pair."""
        return BetaArgs(1 / self.q, 1 / self.p_star)


@dataclass(frozen=True)
class GtfPoint:
    x: float
    s: float
    c: float


def conjugate(r: float) -> float:
    """Hölder conjugate ``r / (r - 1)``."""
    return r / (r - 1)


def pi_pq(pp: ParamPair) -> float:
    """Generalized pi, ``(2/q) B(1/q, 1/p*)``."""
    return 2 / pp.q * beta(pp.shapes)


def asin_pq(x, pp: ParamPair, config: NumericsConfig = DEFAULT):
    """Inverse generalized sine on ``[0, 1]``."""
    x = np.asarray(x, dtype=float)
    if np.any(~((x >= 0) & (x <= 1))):
        raise DomainError("asin_pq needs x in [0, 1]")
    y = x**pp.q
    # 1 - x^q, accurate near x = 1
    with np.errstate(divide="ignore"):
        yc = -np.expm1(pp.q * np.log(x))
    a, b = pp.shapes.a, pp.shapes.b
    val, _ = _ibeta_pair(y, yc, a, b, config.max_iter)
    return _out(0.5 * pi_pq(pp) * val)


def _half_period_pair(x, pp: ParamPair, config: NumericsConfig):
    """``(sin_pq(x)^q, 1 - sin_pq(x)^q)`` for x in ``[0, pi_pq]``."""
    half = 0.5 * pi_pq(pp)
    x = np.asarray(x, dtype=float)
    # reflect [half, 2 half] onto [0, half]; keep the distance to the
    # quarter period exact so the complement is not formed by subtraction
    t = np.where(x <= half, x, 2 * half - x)
    gap = np.abs(half - x)
    return _ibeta_inv_pair(t / half, gap / half, pp.shapes.a, pp.shapes.b, config.max_iter)


def _check_range(x, upper: float, name: str):
    x = np.asarray(x, dtype=float)
    # one ulp of slack so that computed endpoints like 2 * (pi/2) are accepted
    if np.any(~((x >= 0) & (x <= upper * (1 + 4e-16)))):
        raise DomainError(f"{name} needs x in [0, {upper!r}]")
    return np.minimum(x, upper)


def sin_pq(x, pp: ParamPair, config: NumericsConfig = DEFAULT):
    """Generalized sine on ``[0, pi_pq]`` (reflected past ``pi_pq / 2``)."""
    x = _check_range(x, pi_pq(pp), "sin_pq")
    y, _ = _half_period_pair(x, pp, config)
    return _out(y ** (1 / pp.q))


def cos_pq(x, pp: ParamPair, config: NumericsConfig = DEFAULT):
    """Generalized cosine ``(d/dx) sin_pq`` on ``[0, pi_pq / 2]``.

    Computed as ``(1 - sin_pq^q)^(1/p)``; the endpoint values 1 and 0 are
    the continuous extensions.
    """
    x = _check_range(x, 0.5 * pi_pq(pp), "cos_pq")
    _, yc = _half_period_pair(x, pp, config)
    return _out(yc ** (1 / pp.p))


def sin_cos(x, pp: ParamPair, config: NumericsConfig = DEFAULT):
    """``(sin_pq(x), |cos_pq|(x))`` from a single inversion, x in ``[0, pi_pq]``.

    Past the quarter period the true derivative is ``-|cos_pq|``; callers
    needing the sign apply it themselves.
    """
    x = _check_range(x, pi_pq(pp), "sin_cos")
    y, yc = _half_period_pair(x, pp, config)
    return _out(y ** (1 / pp.q)), _out(yc ** (1 / pp.p))


def gtf_point(x: float, pp: ParamPair, config: NumericsConfig = DEFAULT) -> GtfPoint:
    s, c = sin_cos(x, pp, config)
    if x > 0.5 * pi_pq(pp):
        c = -c
    return GtfPoint(float(x), s, c)


def multiple_angle_residual(x, r: float, config: NumericsConfig = DEFAULT):
    """``|sin_{2,r}(2^(2/r) x) - 2^(2/r) sin_{r*,r}(x) cos_{r*,r}(x)^(r*-1)|``.

    Valid for ``x`` in ``[0, pi_{r*,r} / 2]``, where the left argument runs
    over the full half period ``[0, pi_{2,r}]``.
    """
    inner = ParamPair(conjugate(r), r)
    outer = ParamPair(2.0, r)
    k = 2 ** (2 / r)
    x = _check_range(x, 0.5 * pi_pq(inner), "multiple_angle_residual")
    s, c = sin_cos(x, inner, config)
    lhs = np.asarray(sin_pq(np.minimum(k * x, pi_pq(outer)), outer, config))
    rhs = k * np.asarray(s) * np.asarray(c) ** (inner.p - 1)
    return _out(np.abs(lhs - rhs))



def laplacian_residual(pp: ParamPair, n: int = 200, h: float = 1e-4, config: NumericsConfig = DEFAULT) -> float:
    """Max of ``|(|u'|^(p-2) u')' + (q/p*) u^(q-1)|`` for ``u = sin_pq``.

    Both derivatives are central differences with step ``h``, sampled at
    ``n`` points of ``[0.05, 0.45] * pi_pq`` where ``u'`` stays away from 0.
    """
    P = pi_pq(pp)
    x = np.linspace(0.05 * P, 0.45 * P, n)
    u = [np.asarray(sin_pq(x + k * h, pp, config)) for k in (-2, -1, 0, 1, 2)]

    def flux(left, right):
        d = (right - left) / (2 * h)
        return np.abs(d) ** (pp.p - 2) * d

    lap = (flux(u[2], u[4]) - flux(u[0], u[2])) / (2 * h)
    return float(np.max(np.abs(lap + pp.q / pp.p_star * u[2] ** (pp.q - 1))))
