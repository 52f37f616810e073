"""Gamma, beta, incomplete beta and Gauss hypergeometric kernels.

Every function here accepts scalars or numpy arrays and broadcasts like a
ufunc; scalar input gives a Python float back.

The incomplete beta function is evaluated by its continued fraction
(modified Lentz), switching to the reflected fraction past
``x = (a + 1) / (a + b + 2)``. Internally the regularized value is always
produced together with its complement so that callers working near
``x = 1`` never form ``1 - I`` by subtraction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gamma, gammaln, rgamma

from .config import DEFAULT, ConvergenceError, DomainError, NumericsConfig

_TINY = 1e-300
_EPS = np.finfo(float).eps
# Convergence threshold of the continued fraction; the fraction itself is
# accurate to a few ulp, independent of the user-facing rel_tol.
_CF_EPS = 1e-15
_ASYMPTOTIC = 1e-20


@dataclass(frozen=True)
class BetaArgs:
    """Shape parameters ``(a, b)`` of ``B(a, b)``, ``B_x(a, b)``, ``I_x(a, b)``."""

    a: float
    b: float

    def __post_init__(self) -> None:
        if not (self.a > 0 and self.b > 0):
            raise DomainError(f"beta shapes must be positive, got a={self.a}, b={self.b}")


@dataclass(frozen=True)
class HypArgs:
    """Arguments of ``F(a, b; c; x)``."""

    a: float
    b: float
    c: float
    x: float

    def __post_init__(self) -> None:
        if self.c <= 0 and float(self.c).is_integer():
            raise DomainError(f"c must not be zero or a negative integer, got {self.c}")
        if not abs(self.x) < 1:
            raise DomainError(f"|x| must be < 1, got {self.x}")


def _out(value):
    value = np.asarray(value, dtype=float)
    return float(value) if value.ndim == 0 else value


def ln_gamma(a):
    """Natural logarithm of the gamma function for ``a > 0``."""
    a = np.asarray(a, dtype=float)
    if np.any(~(a > 0)):
        raise DomainError("ln_gamma requires a > 0")
    return _out(gammaln(a))


def _ln_beta(a, b):
    return gammaln(a) + gammaln(b) - gammaln(a + b)


def beta(args: BetaArgs) -> float:
    """Complete beta function ``B(a, b)``."""
    return math.exp(ln_gamma(args.a) + ln_gamma(args.b) - ln_gamma(args.a + args.b))


def _betacf(a, b, x, max_iter):
    """Continued fraction of ``I_x(a, b)`` (without the prefactor), vectorized."""
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = np.ones_like(x)
    d = 1.0 - qab * x / qap
    d = np.where(np.abs(d) < _TINY, _TINY, d)
    d = 1.0 / d
    h = d.copy()
    for m in range(1, max_iter + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        d = np.where(np.abs(d) < _TINY, _TINY, d)
        c = 1.0 + aa / c
        c = np.where(np.abs(c) < _TINY, _TINY, c)
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        d = np.where(np.abs(d) < _TINY, _TINY, d)
        c = 1.0 + aa / c
        c = np.where(np.abs(c) < _TINY, _TINY, c)
        d = 1.0 / d
        delta = d * c
        h *= delta
        if np.all(np.abs(delta - 1.0) <= _CF_EPS):
            return h
    raise ConvergenceError(f"incomplete beta continued fraction needs more than {max_iter} steps")


def _ibeta_pair(x, xc, a, b, max_iter=DEFAULT.max_iter):
    """Return ``(I_x(a, b), 1 - I_x(a, b))``; ``xc`` must equal ``1 - x``.

    All arguments broadcast. Both outputs carry full relative accuracy.
    """
    x, xc, a, b = np.broadcast_arrays(*(np.asarray(v, dtype=float) for v in (x, xc, a, b)))
    val = np.zeros(x.shape)
    comp = np.ones(x.shape)
    at_one = xc <= 0
    val[at_one], comp[at_one] = 1.0, 0.0
    inner = (x > 0) & ~at_one
    if not np.any(inner):
        return val, comp
    xi, xci, ai, bi = x[inner], xc[inner], a[inner], b[inner]
    front = np.exp(ai * np.log(xi) + bi * np.log(xci) - _ln_beta(ai, bi))
    direct = xi < (ai + 1.0) / (ai + bi + 2.0)
    v = np.empty(xi.shape)
    w = np.empty(xi.shape)
    if np.any(direct):
        s = direct
        v[s] = front[s] * _betacf(ai[s], bi[s], xi[s], max_iter) / ai[s]
        w[s] = 1.0 - v[s]
    if not np.all(direct):
        s = ~direct
        w[s] = front[s] * _betacf(bi[s], ai[s], xci[s], max_iter) / bi[s]
        v[s] = 1.0 - w[s]
    val[inner], comp[inner] = v, w
    return val, comp


def _check_unit(x, name="x"):
    x = np.asarray(x, dtype=float)
    if np.any(~((x >= 0) & (x <= 1))):
        raise DomainError(f"{name} must lie in [0, 1]")
    return x


def reg_inc_beta(x, args: BetaArgs, config: NumericsConfig = DEFAULT):
    """Regularized incomplete beta ``I_x(a, b) = B_x(a, b) / B(a, b)``."""
    x = _check_unit(x)
    val, _ = _ibeta_pair(x, 1.0 - x, args.a, args.b, config.max_iter)
    return _out(val)


def inc_beta_lower(x, args: BetaArgs, config: NumericsConfig = DEFAULT):
    """Incomplete beta ``B_x(a, b) = int_0^x t^(a-1) (1-t)^(b-1) dt``."""
    return _out(beta(args) * np.asarray(reg_inc_beta(x, args, config)))


def _solve_lower(target, a, b, hi, max_iter):
    """Solve ``I_x(a, b) = target`` for ``x`` in ``(0, hi]`` (vectorized).

    The root is known to lie below ``hi``. Newton steps are taken on
    ``log I`` against ``log x``, which is nearly linear for small ``x``
    since ``I_x ~ x^a / (a B(a, b))``. Steps that leave the current bracket
    fall back to bisection.
    """
    ln_b = _ln_beta(a, b)
    ln_t = np.log(target)
    x = np.minimum(np.exp((ln_t + np.log(a) + ln_b) / a), hi)
    lo = np.zeros_like(x)
    hi = hi.copy()
    # below 1e-20 the asymptote's relative error O(x) is under one ulp
    active = x >= _ASYMPTOTIC
    if not np.any(active):
        return x
    for _ in range(max_iter):
        xa = x[active]
        val, _ = _ibeta_pair(xa, 1.0 - xa, a[active], b[active], max_iter)
        g = np.log(np.maximum(val, _TINY)) - ln_t[active]
        # d(log I)/d(log x) = x * x^(a-1) (1-x)^(b-1) / (B * I)
        slope = np.exp(
            a[active] * np.log(xa) + (b[active] - 1.0) * np.log1p(-xa) - ln_b[active]
        ) / np.maximum(val, _TINY)
        lo_a, hi_a = lo[active], hi[active]
        lo_a = np.where(g < 0, xa, lo_a)
        hi_a = np.where(g > 0, xa, hi_a)
        with np.errstate(over="ignore", invalid="ignore"):
            step = xa * np.exp(-g / slope)
        bad = ~np.isfinite(step) | (step <= lo_a) | (step >= hi_a)
        step = np.where(bad, 0.5 * (lo_a + hi_a), step)
        done = (np.abs(step - xa) <= 4 * _EPS * xa) | (g == 0) | (hi_a - lo_a <= 4 * _EPS * hi_a)
        lo[active], hi[active] = lo_a, hi_a
        x[active] = np.where(g == 0, xa, step)
        idx = np.flatnonzero(active)
        active[idx[done]] = False
        if not np.any(active):
            return x
    raise ConvergenceError(f"inverse incomplete beta did not converge in {max_iter} steps")


def _ibeta_inv_pair(t, tc, a, b, max_iter=DEFAULT.max_iter):
    """Return ``(x, 1 - x)`` with ``I_x(a, b) = t``; ``tc`` must equal ``1 - t``.

    The root is located below or above the mean ``a / (a + b)`` first; in
    the upper case the reflected problem ``I_w(b, a) = tc`` is solved for
    ``w = 1 - x`` so that the small side is always the one computed.
    """
    t, tc, a, b = np.broadcast_arrays(*(np.asarray(v, dtype=float) for v in (t, tc, a, b)))
    x = np.zeros(t.shape)
    xc = np.ones(t.shape)
    top = tc <= 0
    x[top], xc[top] = 1.0, 0.0
    inner = (t > 0) & ~top
    if not np.any(inner):
        return x, xc
    ti, tci, ai, bi = t[inner], tc[inner], a[inner], b[inner]
    mean = ai / (ai + bi)
    i_mean, _ = _ibeta_pair(mean, bi / (ai + bi), ai, bi, max_iter)
    low = ti <= i_mean
    xs = np.empty(ti.shape)
    xcs = np.empty(ti.shape)
    if np.any(low):
        s = low
        xs[s] = _solve_lower(ti[s], ai[s], bi[s], mean[s], max_iter)
        xcs[s] = 1.0 - xs[s]
    if not np.all(low):
        s = ~low
        xcs[s] = _solve_lower(tci[s], bi[s], ai[s], 1.0 - mean[s], max_iter)
        xs[s] = 1.0 - xcs[s]
    x[inner], xc[inner] = xs, xcs
    return x, xc


def reg_inc_beta_inv(y, args: BetaArgs, config: NumericsConfig = DEFAULT):
    """Inverse of ``x -> I_x(a, b)`` on ``[0, 1]``."""
    y = _check_unit(y, "y")
    x, _ = _ibeta_inv_pair(y, 1.0 - y, args.a, args.b, config.max_iter)
    return _out(x)


def _series_2f1(a, b, c, x, config):
    total = 1.0
    term = 1.0
    for n in range(config.max_iter):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * x
        total += term
        # term ratios tend to |x|; bound the tail by the larger of the two
        ratio = max(abs((a + n + 1) * (b + n + 1) / ((c + n + 1) * (n + 2)) * x), abs(x))
        if ratio < 1 and abs(term) * ratio / (1 - ratio) <= config.rel_tol * abs(total):
            return total
        if term == 0:
            return total
    raise ConvergenceError(
        f"2F1({a}, {b}; {c}; {x}) series not converged after {config.max_iter} terms"
    )


X_MAX = 0.95


def gauss_2f1(args: HypArgs, config: NumericsConfig = DEFAULT) -> float:
    """Gauss hypergeometric function ``F(a, b; c; x)`` for real ``x < 1``.

    Summed directly for ``x <= 0.95``. Above that the ``x -> 1 - x``
    connection formula is used, which needs ``c - a - b > 0`` and non-integer.
    """
    a, b, c, x = args.a, args.b, args.c, args.x
    terminating = any(v <= 0 and float(v).is_integer() for v in (a, b))
    if x <= X_MAX or terminating:
        return _series_2f1(a, b, c, x, config)
    s = c - a - b
    if s <= 0 or float(s).is_integer():
        raise ConvergenceError(
            f"2F1 at x={x} > {X_MAX} requires non-integer c - a - b > 0 (got {s})"
        )
    y = 1.0 - x
    # rgamma vanishes at the poles, which is the correct limit of each coefficient
    first = gamma(c) * gamma(s) * rgamma(c - a) * rgamma(c - b)
    second = gamma(c) * gamma(-s) * rgamma(a) * rgamma(b)
    return float(
        first * _series_2f1(a, b, 1.0 - s, y, config)
        + second * y**s * _series_2f1(c - a, c - b, 1.0 + s, y, config)
    )
