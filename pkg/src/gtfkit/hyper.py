"""Hypergeometric and integral identities satisfied by the GTFs.

Each check evaluates both sides independently and returns an
:class:`IdentityCheck`. Left-hand sides come from the 2F1 series or from
tanh-sinh quadrature; right-hand sides from the closed forms in terms of
``asin_pq``, ``sin_pq`` and ``cos_pq``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .config import DEFAULT, DomainError, NumericsConfig
from .gtf import ParamPair, asin_pq, conjugate, pi_pq, sin_cos, sin_pq
from .gtf import _half_period_pair
from .quadrature import tanh_sinh
from .special import HypArgs, X_MAX, gauss_2f1


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    lhs: float
    rhs: float
    residual: float
    inputs: dict = field(default_factory=dict)

    @classmethod
    def of(cls, name: str, lhs: float, rhs: float, **inputs) -> "IdentityCheck":
        return cls(name, float(lhs), float(rhs), abs(float(lhs) - float(rhs)), inputs)


def _check_series_x(x: float) -> None:
    if not 0 < x <= X_MAX:
        raise DomainError(f"x must lie in (0, {X_MAX}], got {x}")


def first_rhs(pp: ParamPair, x: float, config: NumericsConfig = DEFAULT) -> float:
    """Closed form of ``F(1/q, 1/p - 1; 1 + 1/q; x)``."""
    p, q, ps = pp.p, pp.q, pp.p_star
    y = x ** (1 / q)
    return (q * asin_pq(y, pp, config) + ps * y * (1 - x) ** (1 / ps)) / ((ps + q) * y)


def second_rhs(pp: ParamPair, x: float, config: NumericsConfig = DEFAULT) -> float:
    """Closed form of ``F(1 + 1/q, 1/p; 2 + 1/q; x)``."""
    q, ps = pp.q, pp.p_star
    y = x ** (1 / q)
    return ps * (q + 1) * (asin_pq(y, pp, config) - y * (1 - x) ** (1 / ps)) / ((ps + q) * x * y)


def hyp_first_identity(pp: ParamPair, x: float, config: NumericsConfig = DEFAULT) -> IdentityCheck:
    _check_series_x(x)
    q = pp.q
    lhs = gauss_2f1(HypArgs(1 / q, 1 / pp.p - 1, 1 + 1 / q, x), config)
    return IdentityCheck.of("2f1_first", lhs, first_rhs(pp, x, config), p=pp.p, q=q, x=x)


def hyp_second_identity(pp: ParamPair, x: float, config: NumericsConfig = DEFAULT) -> IdentityCheck:
    _check_series_x(x)
    q = pp.q
    lhs = gauss_2f1(HypArgs(1 + 1 / q, 1 / pp.p, 2 + 1 / q, x), config)
    return IdentityCheck.of("2f1_second", lhs, second_rhs(pp, x, config), p=pp.p, q=q, x=x)


def _quad_powers(x: float, pp: ParamPair, config: NumericsConfig):
    """Quadratures of ``cos_pq^p`` and ``sin_pq^q`` over ``[0, x]``."""
    if not 0 <= x <= 0.5 * pi_pq(pp) * (1 + 4e-16):
        raise DomainError("x must lie in [0, pi_pq / 2]")
    # cos^p = 1 - sin^q, both straight from the inverse-beta pair
    cos_p = tanh_sinh(lambda t: _half_period_pair(t, pp, config)[1], 0.0, x, config=config)
    sin_q = tanh_sinh(lambda t: _half_period_pair(t, pp, config)[0], 0.0, x, config=config)
    return cos_p, sin_q


def _mixed_term(x: float, pp: ParamPair, config: NumericsConfig) -> float:
    s, c = sin_cos(x, pp, config)
    return s * c ** (pp.p - 1)


def integral_cos_power(x: float, pp: ParamPair, config: NumericsConfig = DEFAULT) -> IdentityCheck:
    """``int_0^x cos_pq^p = (q x + p* sin cos^(p-1)) / (p* + q)``."""
    lhs, _ = _quad_powers(x, pp, config)
    ps, q = pp.p_star, pp.q
    rhs = (q * x + ps * _mixed_term(x, pp, config)) / (ps + q)
    return IdentityCheck.of("int_cos_power", lhs, rhs, p=pp.p, q=q, x=x)


def integral_sin_power(x: float, pp: ParamPair, config: NumericsConfig = DEFAULT) -> IdentityCheck:
    """``int_0^x sin_pq^q = (p* x - p* sin cos^(p-1)) / (p* + q)``."""
    _, lhs = _quad_powers(x, pp, config)
    ps, q = pp.p_star, pp.q
    rhs = (ps * x - ps * _mixed_term(x, pp, config)) / (ps + q)
    return IdentityCheck.of("int_sin_power", lhs, rhs, p=pp.p, q=q, x=x)


def sum_rule(x: float, pp: ParamPair, config: NumericsConfig = DEFAULT) -> IdentityCheck:
    """The two closed forms add up to ``x``."""
    ps, q = pp.p_star, pp.q
    m = _mixed_term(x, pp, config)
    total = (q * x + ps * m) / (ps + q) + (ps * x - ps * m) / (ps + q)
    return IdentityCheck.of("sum_rule", total, x, p=pp.p, q=q, x=x)


def integral_powers_diagonal(x: float, r: float, config: NumericsConfig = DEFAULT):
    """``p = q = r``: ``x/r* + sin cos^(r-1)/r`` and ``x/r - sin cos^(r-1)/r``."""
    pp = ParamPair(r, r)
    cos_p, sin_q = _quad_powers(x, pp, config)
    m = _mixed_term(x, pp, config)
    return (
        IdentityCheck.of("int_cos_power_diag", cos_p, x / conjugate(r) + m / r, r=r, x=x),
        IdentityCheck.of("int_sin_power_diag", sin_q, x / r - m / r, r=r, x=x),
    )


def integral_powers_conjugate(x: float, r: float, config: NumericsConfig = DEFAULT):
    """``p* = q = r``: both integrals via the multiple-angle formula.

    ``x/2 +- sin_{2,r}(2^(2/r) x) / 2^(1 + 2/r)`` on ``[0, pi_{r*,r} / 2]``.
    """
    pp = ParamPair(conjugate(r), r)
    outer = ParamPair(2.0, r)
    cos_p, sin_q = _quad_powers(x, pp, config)
    k = 2 ** (2 / r)
    m = sin_pq(min(k * x, pi_pq(outer)), outer, config) / (2 * k)
    return (
        IdentityCheck.of("int_cos_power_conj", cos_p, x / 2 + m, r=r, x=x),
        IdentityCheck.of("int_sin_power_conj", sin_q, x / 2 - m, r=r, x=x),
    )


def classical_first(x: float) -> float:
    """``F(1/2, -1/2; 3/2; x)`` at ``p = q = 2``, written with ``arcsin``."""
    y = np.sqrt(x)
    return float((np.arcsin(y) + y * np.sqrt(1 - x)) / (2 * y))


def classical_second(x: float) -> float:
    """``F(3/2, 1/2; 5/2; x)`` at ``p = q = 2``, written with ``arcsin``."""
    y = np.sqrt(x)
    return float(3 * (np.arcsin(y) - y * np.sqrt(1 - x)) / (2 * x * y))
