"""Best constant of the L^q Lyapunov inequality for the 1-d p-Laplacian.

If ``-(|u'|^(p-2) u')' = a(x) |u|^(p-2) u`` has a nontrivial solution with
``u(0) = u(L) = 0``, then ``||a||_q >= m_q`` where ``m_q`` is the infimum of

    J_q(v) = int |v'|^p / (int |v|^(p q*))^(1/q*)

over ``W_0^{1,p}(0, L)``. The infimum is attained by ``R sin_{p, p q*}(pi x / L)``
with ``pi = pi_{p, p q*}``, which gives ``m_q`` and the extremal weight in
closed form. ``q = inf`` is the first Dirichlet eigenvalue ``(p-1)(pi_p / L)^p``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .config import DEFAULT, DomainError, NumericsConfig
from .gtf import ParamPair, conjugate, pi_pq, sin_cos, sin_pq
from .quadrature import tanh_sinh
from .special import BetaArgs, _out, beta

INF = math.inf


@dataclass(frozen=True)
class LyapunovInput:
    p: float
    q: float
    L: float = 1.0

    def __post_init__(self) -> None:
        if not self.p > 1:
            raise DomainError(f"p must exceed 1, got {self.p}")
        if not self.q > 1:
            raise DomainError(f"q must exceed 1 or be inf, got {self.q}")
        if not (self.L > 0 and math.isfinite(self.L)):
            raise DomainError(f"L must be positive, got {self.L}")

    @property
    def finite(self) -> bool:
        return math.isfinite(self.q)

    @property
    def q_star(self) -> float:
        return 1.0 if not self.finite else conjugate(self.q)

    @property
    def pair(self) -> ParamPair:
        """``(p, p q*)``; for ``q = inf`` this is ``(p, p)``."""
        return ParamPair(self.p, self.p * self.q_star)


@dataclass(frozen=True)
class LyapunovResult:
    best_constant: float
    amplitude: float | None
    pi_inner: float
    input: LyapunovInput

    @property
    def multiplier(self) -> float | None:
        """Lagrange multiplier ``A_q = (p q* / p*) (pi / L)^p R^(p - p q*)``."""
        if self.amplitude is None:
            return None
        inp = self.input
        big_q = inp.p * inp.q_star
        return (
            big_q / conjugate(inp.p)
            * (self.pi_inner / inp.L) ** inp.p
            * self.amplitude ** (inp.p - big_q)
        )


def first_eigenvalue(p: float, L: float) -> float:
    """``(p - 1) (pi_p / L)^p``."""
    return (p - 1) * (pi_pq(ParamPair(p, p)) / L) ** p


def singular_integral(p: float, q: float) -> float:
    """``int_0^{pi_p/2} sin_p(x)^(-1/q) dx = (1/p) B(1/p*, 1/(p q*))``."""
    return beta(BetaArgs(1 / conjugate(p), 1 / (p * conjugate(q)))) / p


def singular_integral_direct(p: float, q: float, config: NumericsConfig = DEFAULT) -> float:
    """The same integral by tanh-sinh quadrature of ``sin_p^(-1/q)`` itself."""
    pp = ParamPair(p, p)

    def integrand(x):
        s = np.asarray(sin_pq(x, pp, config))
        # sin_p x = x (1 + O(x^p)) where the inverse underflows
        return np.where(s > 0, s, x) ** (-1 / q)

    return tanh_sinh(integrand, 0.0, 0.5 * pi_pq(pp), config=config)


def singular_integral_substituted(p: float, q: float, config: NumericsConfig = DEFAULT) -> float:
    """After ``t^(q*) = sin_p x``: ``q* int_0^1 (1 - t^(p q*))^(-1/p) dt``."""
    qs = conjugate(q)
    big_q = p * qs

    def integrand(t, left, right):
        # 1 - t^Q without cancellation near t = 1
        with np.errstate(divide="ignore"):
            gap = np.where(t < 0.5, -np.expm1(big_q * np.log(t)), -np.expm1(big_q * np.log1p(-right)))
        return qs * gap ** (-1 / p)

    return tanh_sinh(integrand, 0.0, 1.0, gaps=True, config=config)


def best_constant(inp: LyapunovInput, R: float = 1.0) -> LyapunovResult:
    """Best constant ``m_q`` (``q`` finite) or ``(p-1)(pi_p/L)^p`` (``q = inf``)."""
    p, q, L = inp.p, inp.q, inp.L
    if not inp.finite:
        return LyapunovResult(first_eigenvalue(p, L), None, pi_pq(ParamPair(p, p)), inp)
    if not R > 0:
        raise DomainError("amplitude R must be positive")
    S = singular_integral(p, q)
    m = (
        2**p * (p - 1) * (q - 1) ** (p - 1 + 1 / q)
        / (L ** (p - 1 / q) * q ** (p - 1) * (p * q - 1) ** (1 / q))
        * S**p
    )
    return LyapunovResult(m, R, pi_pq(inp.pair), inp)


def best_constant_pi_form(inp: LyapunovInput) -> float:
    """``m_q`` written through ``pi_{p, p q*}`` instead of the singular integral."""
    if not inp.finite:
        return first_eigenvalue(inp.p, inp.L)
    p, q, L = inp.p, inp.q, inp.L
    qs = conjugate(q)
    ps = conjugate(p)
    P = pi_pq(inp.pair)
    return p * qs * P**p / (L ** (p - 1 / q) * ps ** (1 / qs) * (ps + p * qs) ** (1 / q))


def _check_x(x, L):
    x = np.asarray(x, dtype=float)
    if np.any(~((x >= 0) & (x <= L * (1 + 4e-16)))):
        raise DomainError(f"x must lie in [0, {L}]")
    return np.minimum(x, L)


def extremal_weight(x, inp: LyapunovInput, config: NumericsConfig = DEFAULT):
    """Weight attaining the bound: ``(p-1) q* (pi/L)^p sin_{p,pq*}(pi x/L)^(p/(q-1))``."""
    x = _check_x(x, inp.L)
    p = inp.p
    if not inp.finite:
        return _out(np.full(x.shape, first_eigenvalue(p, inp.L)))
    P = pi_pq(inp.pair)
    s = np.asarray(sin_pq(P * x / inp.L, inp.pair, config))
    return _out((p - 1) * inp.q_star * (P / inp.L) ** p * s ** (p / (inp.q - 1)))


def extremal_solution(x, inp: LyapunovInput, R: float = 1.0, config: NumericsConfig = DEFAULT):
    """Minimizer ``R sin_{p,pq*}(pi x / L)`` over the whole interval.

    For ``q = inf`` this is the first eigenfunction ``R sin_p(pi_p x / L)``.
    """
    x = _check_x(x, inp.L)
    P = pi_pq(inp.pair)
    return _out(R * np.asarray(sin_pq(P * x / inp.L, inp.pair, config)))


def extremal_slope(x, inp: LyapunovInput, R: float = 1.0, config: NumericsConfig = DEFAULT):
    """Exact derivative of :func:`extremal_solution`, negative past ``L/2``."""
    x = _check_x(x, inp.L)
    P = pi_pq(inp.pair)
    _, c = sin_cos(P * x / inp.L, inp.pair, config)
    sign = np.where(x <= 0.5 * inp.L, 1.0, -1.0)
    return _out(R * P / inp.L * sign * np.asarray(c))


def weight_norm(inp: LyapunovInput, config: NumericsConfig = DEFAULT) -> float:
    """``||a_q||_q`` of the extremal weight by tanh-sinh quadrature.

    The weight is symmetric about ``L/2`` but only Hölder continuous there,
    so the rule runs on ``[0, L/2]`` where that point is an endpoint.
    """
    if not inp.finite:
        return first_eigenvalue(inp.p, inp.L)
    half = tanh_sinh(
        lambda x: np.asarray(extremal_weight(x, inp, config)) ** inp.q,
        0.0,
        0.5 * inp.L,
        config=config,
    )
    return (2 * half) ** (1 / inp.q)


def extremal_residual(
    inp: LyapunovInput, grid_n: int = 2000, R: float = 1.0, config: NumericsConfig = DEFAULT
) -> float:
    """Weak-form residual of ``(phi(u'))' + A_q |u|^(pq*-2) u = 0`` for the minimizer.

    On each cell ``[x_{i-1}, x_{i+1}]`` of a uniform grid the flux jump
    ``phi(u')(x_{i+1}) - phi(u')(x_{i-1})`` is compared with the Simpson
    integral of ``-A_q u^(pq*-1)``. The largest mismatch over cells inside
    ``[0.05 L, 0.95 L]`` is returned, per unit length and relative to
    ``max A_q u^(pq*-1) = A_q R^(pq*-1)``.
    """
    if not inp.finite:
        raise DomainError("extremal_residual needs finite q")
    if grid_n < 100:
        raise DomainError("grid_n must be >= 100")
    res = best_constant(inp, R)
    big_q = inp.p * inp.q_star
    x = np.linspace(0.0, inp.L, grid_n + 1)
    h = inp.L / grid_n
    du = np.asarray(extremal_slope(x, inp, R, config))
    # phi(s) = |s|^(p-2) s, written so that s = 0 is harmless for p < 2
    flux = np.sign(du) * np.abs(du) ** (inp.p - 1)
    source = res.multiplier * np.asarray(extremal_solution(x, inp, R, config)) ** (big_q - 1)
    cell = (h / 3) * (source[:-2] + 4 * source[1:-1] + source[2:])
    # u is only Hölder smooth at L/2, which costs Simpson its order there
    mid = 0.5 * inp.L
    near = np.flatnonzero(np.abs(x[1:-1] - mid) <= 16 * h)

    def f(t):
        return res.multiplier * np.asarray(extremal_solution(t, inp, R, config)) ** (big_q - 1)

    for i in near:
        a, b = x[i], x[i + 2]
        if a < mid < b:
            cell[i] = tanh_sinh(f, a, mid, config=config) + tanh_sinh(f, mid, b, config=config)
        else:
            cell[i] = tanh_sinh(f, a, b, config=config)
    mismatch = (flux[2:] - flux[:-2] + cell) / (2 * h)
    xi = x[1:-1]
    inside = (xi >= 0.05 * inp.L) & (xi <= 0.95 * inp.L)
    return float(np.max(np.abs(mismatch[inside])) / (res.multiplier * R ** (big_q - 1)))


@dataclass(frozen=True)
class SampledFunction:
    """Piecewise-linear function on ``[0, L]`` vanishing at both ends."""

    nodes: np.ndarray
    values: np.ndarray

    def __post_init__(self) -> None:
        nodes = np.asarray(self.nodes, dtype=float)
        values = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "values", values)
        if nodes.ndim != 1 or nodes.shape != values.shape or nodes.size < 3:
            raise DomainError("nodes and values must be 1-d of equal length >= 3")
        if np.any(np.diff(nodes) <= 0) or nodes[0] != 0:
            raise DomainError("nodes must increase strictly from 0")
        if values[0] != 0 or values[-1] != 0:
            raise DomainError("boundary values must be 0")

    @property
    def L(self) -> float:
        return float(self.nodes[-1])

    @classmethod
    def from_callable(cls, f: Callable, nodes) -> "SampledFunction":
        nodes = np.asarray(nodes, dtype=float)
        values = np.asarray(f(nodes), dtype=float)
        values[0] = values[-1] = 0.0
        return cls(nodes, values)

    def scaled(self, c: float) -> "SampledFunction":
        return SampledFunction(self.nodes, c * self.values)

    def slope_power_integral(self, p: float) -> float:
        """``int |v'|^p``, exact for the interpolant."""
        dx = np.diff(self.nodes)
        return float(np.sum(np.abs(np.diff(self.values) / dx) ** p * dx))

    def power_integral(self, r: float) -> float:
        """``int |v|^r`` by the composite trapezoid rule."""
        f = np.abs(self.values) ** r
        return float(np.sum(0.5 * (f[1:] + f[:-1]) * np.diff(self.nodes)))


def rayleigh_J(v: SampledFunction, p: float, q: float) -> float:
    """``J_q(v) = int |v'|^p / (int |v|^(p q*))^(1/q*)``; ``q = inf`` gives ``q* = 1``."""
    qs = 1.0 if math.isinf(q) else conjugate(q)
    denom = v.power_integral(p * qs)
    if not denom > 0:
        raise DomainError("J_q is undefined for the zero function")
    return v.slope_power_integral(p) / denom ** (1 / qs)


def sobolev_poincare_constant(p: float, r: float, L: float) -> float:
    """Best ``C`` in ``||v||_r <= C ||v'||_p`` on ``W_0^{1,p}(0, L)``, ``r > p``."""
    if not p > 1:
        raise DomainError("p must exceed 1")
    if not r > p:
        raise DomainError(f"need r > p, got r={r}, p={p}")
    ps = conjugate(p)
    return (
        (1 + ps / r) ** (1 / p) / (1 + r / ps) ** (1 / r)
        * L ** (1 / ps + 1 / r) / pi_pq(ParamPair(p, r))
    )


def sobolev_quotient(v: SampledFunction, p: float, r: float) -> float:
    """``||v||_r / ||v'||_p`` for a sampled trial function."""
    return v.power_integral(r) ** (1 / r) / v.slope_power_integral(p) ** (1 / p)


def random_trial_function(rng: np.random.Generator, L: float = 1.0) -> SampledFunction:
    """Sum of 1-4 positive bumps on 50-500 random nodes.

    Each bump is ``amp * (1 - ((x - c)/w)^2)_+^e`` with its support inside
    ``[0, L]``, so the sum vanishes at both ends.
    """
    n = int(rng.integers(50, 501))
    nodes = np.concatenate(([0.0], np.sort(rng.uniform(0, L, n - 2)), [L]))
    values = np.zeros(n)
    for _ in range(int(rng.integers(1, 5))):
        c = rng.uniform(0.1, 0.9) * L
        w = rng.uniform(0.2, 1.0) * min(c, L - c)
        e = rng.uniform(1.0, 3.0)
        amp = rng.uniform(0.1, 1.0)
        values += amp * np.clip(1 - ((nodes - c) / w) ** 2, 0, None) ** e
    values[0] = values[-1] = 0.0
    if not np.any(values > 0):
        # every bump fell between two nodes
        return random_trial_function(rng, L)
    return SampledFunction(nodes, values)
