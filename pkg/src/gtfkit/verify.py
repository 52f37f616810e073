"""Seeded verification suites with per-check tolerances.

Every suite returns a :class:`VerificationReport`, a flat list of records
``(name, inputs, lhs, rhs, residual, tolerance, pass)``. For equalities the
residual is ``|lhs - rhs|`` (or its relative version, noted in the name);
for inequalities it is the amount by which the inequality is violated, so
that ``pass`` always means ``residual <= tolerance``.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np
from scipy.optimize import minimize_scalar

from . import bvp, gtf, hyper, lyapunov
from .config import DEFAULT, NumericsConfig
from .gtf import ParamPair, conjugate, pi_pq
from .quadrature import tanh_sinh

SUITES = ("gtf", "bvp", "hyper", "lyapunov")


@dataclass
class Check:
    name: str
    inputs: dict
    lhs: float
    rhs: float
    residual: float
    tolerance: float
    passed: bool

    def to_dict(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "Check":
        d = dict(d)
        d["passed"] = d.pop("pass")
        return cls(**d)


@dataclass
class VerificationReport:
    suite: str
    seed: int
    checks: list[Check] = field(default_factory=list)

    @property
    def summary(self) -> dict:
        n_pass = sum(c.passed for c in self.checks)
        return {"pass": n_pass, "fail": len(self.checks) - n_pass}

    @property
    def ok(self) -> bool:
        return self.summary["fail"] == 0

    def equal(self, name, lhs, rhs, tol, **inputs) -> Check:
        return self._add(name, inputs, lhs, rhs, abs(lhs - rhs), tol)

    def rel_equal(self, name, lhs, rhs, tol, **inputs) -> Check:
        return self._add(name, inputs, lhs, rhs, abs(lhs / rhs - 1), tol)

    def at_most(self, name, lhs, rhs, tol=0.0, **inputs) -> Check:
        """Record ``lhs <= rhs``; the residual is the violation."""
        return self._add(name, inputs, lhs, rhs, max(0.0, lhs - rhs), tol)

    def _add(self, name, inputs, lhs, rhs, residual, tol) -> Check:
        inputs = {k: _jsonable(v) for k, v in inputs.items()}
        check = Check(name, inputs, float(lhs), float(rhs), float(residual), float(tol),
                      bool(residual <= tol))
        self.checks.append(check)
        return check

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "checks": [c.to_dict() for c in self.checks],
            "summary": self.summary,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        d = json.loads(text)
        return cls(d["suite"], d["seed"], [Check.from_dict(c) for c in d["checks"]])

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            flag = "PASS" if c.passed else "FAIL"
            args = " ".join(f"{k}={v}" for k, v in c.inputs.items())
            lines.append(f"{flag} {c.name:<24} residual={c.residual:.3e} tol={c.tolerance:.1e} {args}")
        s = self.summary
        lines.append(f"suite={self.suite} seed={self.seed} pass={s['pass']} fail={s['fail']}")
        return "\n".join(lines)


def _jsonable(v):
    if isinstance(v, (np.floating, np.integer)):
        v = v.item()
    if isinstance(v, float) and math.isinf(v):
        return "inf"
    return v


def run_gtf(seed: int = 0, config: NumericsConfig = DEFAULT) -> VerificationReport:
    rep = VerificationReport("gtf", seed)
    classical = ParamPair(2.0, 2.0)
    x = np.linspace(0, np.pi, 1000)
    xh = np.linspace(0, np.pi / 2, 1000)
    rep.equal("classical_sin", float(np.max(np.abs(gtf.sin_pq(x, classical, config) - np.sin(x)))), 0, 1e-11)
    rep.equal("classical_cos", float(np.max(np.abs(gtf.cos_pq(xh, classical, config) - np.cos(xh)))), 0, 1e-11)
    rep.equal("classical_asin", gtf.asin_pq(0.5, classical, config), np.pi / 6, 1e-12)
    rep.equal("classical_pi", pi_pq(classical), np.pi, 1e-11)

    grid = np.linspace(1.1, 10, 20)
    y = np.linspace(0, 1, 50)
    for p in grid:
        for q in grid:
            pp = ParamPair(p, q)
            P = pi_pq(pp)
            xs = np.linspace(0, 0.5 * P, 50)
            s, c = gtf.sin_cos(xs, pp, config)
            err = np.abs(c**p + s**q - 1)
            k = int(np.argmax(err))
            rep.equal("pythagorean", float(c[k] ** p + s[k] ** q), 1.0, 1e-10, p=p, q=q, x=float(xs[k]))
            back = np.abs(gtf.sin_pq(gtf.asin_pq(y, pp, config), pp, config) - y)
            rep.equal("inverse_roundtrip", float(np.max(back)), 0.0, 1e-10, p=p, q=q)
            rep.equal("pi_half_period", 2 * gtf.asin_pq(1.0, pp, config), P, 1e-11, p=p, q=q)
            quad = 2 * tanh_sinh(_pi_integrand(p, q), 0.0, 1.0, gaps=True, config=config)
            rep.equal("pi_quadrature", quad, P, 1e-10, p=p, q=q)

    for p in np.linspace(1.25, 10, 6):
        for q in np.linspace(1.1, 10, 6):
            pp = ParamPair(p, q)
            rep.equal("plaplacian_ode", gtf.laplacian_residual(pp, config=config), 0.0, 1e-5, p=p, q=q)

    for r in (1.2, 1.5, 2.0, 3.0, 7.0):
        inner = ParamPair(conjugate(r), r)
        xs = np.linspace(0, 0.5 * pi_pq(inner), 101)
        res = float(np.max(gtf.multiple_angle_residual(xs, r, config)))
        rep.equal("multiple_angle", res, 0.0, 1e-10, r=r)
        rep.equal("quarter_period_scaling", 0.5 * pi_pq(inner),
                  pi_pq(ParamPair(2.0, r)) / 2 ** (2 / r), 1e-11, r=r)
    return rep


def _pi_integrand(p, q):
    def f(t, left, right):
        # 1 - t^q; near t = 1 from the exact gap
        with np.errstate(divide="ignore"):
            gap = np.where(t < 0.5, -np.expm1(q * np.log(t)), -np.expm1(q * np.log1p(-right)))
        return gap ** (-1 / p)

    return f


def _argmax(f, H):
    out = minimize_scalar(lambda x: -f(x), bounds=(0.0, H), method="bounded",
                          options={"xatol": 1e-10 * H})
    return float(out.x)


def run_bvp(seed: int = 0, config: NumericsConfig = DEFAULT) -> VerificationReport:
    rep = VerificationReport("bvp", seed)
    for r in np.linspace(1.01, 1.99, 25):
        for H in (0.5, 1.0, 2.0):
            prob = bvp.NonlocalProblem(r, H)
            ext = bvp.phi_extremum(prob, config)
            rep.at_most("extremum_left_of_mid", ext.location, 0.5 * H, r=r, H=H)
            found = _argmax(lambda x: bvp.phi_r(x, prob, config), H)
            rep.equal("extremum_location", found, ext.location, 1e-6, r=r, H=H)
            rep.equal("extremum_value", bvp.phi_r(ext.location, prob, config), ext.value, 1e-12, r=r, H=H)
        prob = bvp.NonlocalProblem(r, 1.0)
        slope = np.asarray(bvp.phi_r_prime(np.linspace(0, 1, 2001)[1:-1], prob, config))
        changes = int(np.count_nonzero(np.diff(np.sign(slope)) != 0))
        rep.equal("single_sign_change", changes, 1, 0, r=r)

    for r in (1.2, 1.5, 1.9):
        prob = bvp.NonlocalProblem(r, 1.0)
        coarse = bvp.nonlocal_residual(prob, 2000, config=config)
        fine = bvp.nonlocal_residual(prob, 4000, config=config)
        rep.at_most("nonlocal_residual", coarse, 1e-4, r=r, n=2000)
        rep.at_most("nonlocal_refines", fine, coarse, r=r, n=4000)

    grid = np.linspace(1.1, 10, 10)
    for p in grid:
        for q in grid:
            ext = bvp.general_extremum(bvp.GeneralProblem(p, q), config)
            expected = "below" if p > q else "above" if q > p else "equal"
            rep.equal("general_trichotomy", float(ext.midpoint_relation == expected), 1.0, 0, p=p, q=q)
            pp = ParamPair(p, q)
            mass = bvp.median_mass(pp, config)
            if pp.p_star > q:
                rep.at_most("median_mass_below", mass, 0.5, p=p, q=q)
            else:
                rep.at_most("median_mass_above", 0.5, mass, p=p, q=q)
    grid = np.linspace(1.1, 10, 30)
    for p in grid:
        for q in grid:
            pp = ParamPair(p, q)
            if abs(pp.p_star - q) < 1e-9:
                continue
            gap = bvp.median_gap(pp, config)
            # sign(gap) must equal sign(p* - q); the residual is the mismatch
            rep.equal("median_sign", float(np.sign(gap)), float(np.sign(pp.p_star - q)), 0, p=p, q=q)
    for p in (1.2, 1.5, 2.0, 4.0, 9.0):
        pp = ParamPair(p, conjugate(p))
        rep.equal("median_mass_equal", bvp.median_mass(pp, config), 0.5, 1e-10, p=p)
        rep.equal("median_equality", gtf.sin_pq(0.25 * pi_pq(pp), pp, config),
                  2 ** (-1 / pp.p_star), 1e-10, p=p)

    for p, q in ((3.0, 2.0), (2.0, 3.0), (1.5, 1.5), (6.0, 1.5)):
        prob = bvp.GeneralProblem(p, q)
        rep.at_most("general_residual", bvp.general_residual(prob, 2000, config), 1e-4, p=p, q=q)
        ext = bvp.general_extremum(prob, config)
        found = _argmax(lambda x: bvp.general_solution(x, prob, config), 1.0)
        rep.equal("general_location", found, ext.location, 1e-6, p=p, q=q)
    return rep


def run_hyper(seed: int = 0, config: NumericsConfig = DEFAULT) -> VerificationReport:
    rep = VerificationReport("hyper", seed)
    rng = np.random.default_rng(seed)
    for _ in range(200):
        p, q = rng.uniform(1.1, 10, 2)
        x = float(rng.uniform(0.01, 0.95))
        pp = ParamPair(p, q)
        for chk in (hyper.hyp_first_identity(pp, x, config), hyper.hyp_second_identity(pp, x, config)):
            rep.equal(chk.name, chk.lhs, chk.rhs, 1e-9, p=p, q=q, x=x)
    classical = ParamPair(2.0, 2.0)
    for x in (0.1, 0.25, 0.5, 0.9):
        rep.equal("2f1_first_classical", hyper.hyp_first_identity(classical, x, config).lhs,
                  hyper.classical_first(x), 1e-11, x=x)
        rep.equal("2f1_second_classical", hyper.hyp_second_identity(classical, x, config).lhs,
                  hyper.classical_second(x), 1e-11, x=x)

    # the second identity is the derivative of the first
    for _ in range(10):
        p, q = rng.uniform(1.1, 10, 2)
        x = float(rng.uniform(0.05, 0.9))
        pp = ParamPair(p, q)
        h = 1e-5
        fd = (hyper.first_rhs(pp, x + h, config) - hyper.first_rhs(pp, x - h, config)) / (2 * h)
        a, b, c = 1 / q, 1 / p - 1, 1 + 1 / q
        rep.equal("derivative_linkage", fd, a * b / c * hyper.second_rhs(pp, x, config), 1e-6,
                  p=p, q=q, x=x)

    for i in range(100):
        kind = i % 4
        if kind < 2:
            p, q = rng.uniform(1.1, 10, 2)
            pp = ParamPair(p, q)
            x = float(rng.uniform(0, 1) * 0.5 * pi_pq(pp))
            for chk in (hyper.integral_cos_power(x, pp, config), hyper.integral_sin_power(x, pp, config)):
                rep.equal(chk.name, chk.lhs, chk.rhs, 1e-9, p=p, q=q, x=x)
            chk = hyper.sum_rule(x, pp, config)
            rep.equal(chk.name, chk.lhs, chk.rhs, 1e-12, p=p, q=q, x=x)
        elif kind == 2:
            r = float(rng.uniform(1.1, 10))
            x = float(rng.uniform(0, 1) * 0.5 * pi_pq(ParamPair(r, r)))
            for chk in hyper.integral_powers_diagonal(x, r, config):
                rep.equal(chk.name, chk.lhs, chk.rhs, 1e-9, r=r, x=x)
        else:
            r = float(rng.uniform(1.1, 10))
            x = float(rng.uniform(0, 1) * 0.5 * pi_pq(ParamPair(conjugate(r), r)))
            for chk in hyper.integral_powers_conjugate(x, r, config):
                rep.equal(chk.name, chk.lhs, chk.rhs, 1e-9, r=r, x=x)
    return rep


def run_lyapunov(seed: int = 0, config: NumericsConfig = DEFAULT) -> VerificationReport:
    rep = VerificationReport("lyapunov", seed)
    L_ = lyapunov
    grid = np.linspace(1.25, 6, 10)
    for p in grid:
        for q in grid:
            for L in (0.5, 1.0, 2.0):
                inp = L_.LyapunovInput(p, q, L)
                m = L_.best_constant(inp).best_constant
                rep.rel_equal("weight_norm", L_.weight_norm(inp, config), m, 1e-8, p=p, q=q, L=L)
            inp = L_.LyapunovInput(p, q)
            rep.rel_equal("pi_form", L_.best_constant_pi_form(inp),
                          L_.best_constant(inp).best_constant, 1e-12, p=p, q=q)

    for p, q in ((2.0, 2.0), (1.5, 3.0), (3.0, 1.5), (4.0, 4.0)):
        S = L_.singular_integral(p, q)
        qs = conjugate(q)
        rep.equal("singular_vs_pi", S, qs * pi_pq(ParamPair(p, p * qs)) / 2, 1e-9, p=p, q=q)
        rep.equal("singular_vs_quadrature", S, L_.singular_integral_direct(p, q, config), 1e-9, p=p, q=q)
        rep.equal("singular_vs_substituted", S, L_.singular_integral_substituted(p, q, config), 1e-9,
                  p=p, q=q)
        inp = L_.LyapunovInput(p, q)
        rep.at_most("weak_residual", L_.extremal_residual(inp, 2000, config=config), 1e-4, p=p, q=q)

    rng = np.random.default_rng(seed)
    pairs = [(p, q) for p in (1.5, 2.0, 3.0) for q in (1.5, 2.0, 4.0, L_.INF)]
    consts = {pq: L_.best_constant(L_.LyapunovInput(*pq)).best_constant for pq in pairs}
    for i in range(500):
        p, q = pairs[i % len(pairs)]
        v = L_.random_trial_function(rng)
        J = L_.rayleigh_J(v, p, q)
        rep.at_most("lower_bound", consts[p, q] * (1 - 5e-3), J, p=p, q=q, trial=i)

    nodes = np.linspace(0, 1, 10_001)
    for p, q in ((1.5, 2.0), (2.0, 2.0), (3.0, 4.0), (2.0, L_.INF)):
        inp = L_.LyapunovInput(p, q)
        m = L_.best_constant(inp).best_constant
        v = L_.SampledFunction.from_callable(lambda x: L_.extremal_solution(x, inp, 1.0, config), nodes)
        J = L_.rayleigh_J(v, p, q)
        rep.rel_equal("saturation", J, m, 1e-3, p=p, q=q)
        rep.equal("homogeneity", L_.rayleigh_J(v.scaled(2.0), p, q), J, 1e-12 * J, p=p, q=q)

    for p in (1.5, 2.0, 3.0):
        lo = 2**p
        hi = L_.first_eigenvalue(p, 1.0)
        m = {q: L_.best_constant(L_.LyapunovInput(p, q)).best_constant for q in (1.001, 1.01, 1.1, 10, 100, 1000)}
        rep.rel_equal("limit_q_to_1", m[1.001], lo, 1e-2, p=p, q=1.001)
        rep.rel_equal("limit_q_to_inf", m[1000], hi, 1e-2, p=p, q=1000)
        for near, far in ((1.001, 1.01), (1.01, 1.1)):
            rep.at_most("limit_q_to_1_monotone", abs(m[near] / lo - 1), abs(m[far] / lo - 1), p=p, q=near)
        for near, far in ((1000, 100), (100, 10)):
            rep.at_most("limit_q_to_inf_monotone", abs(m[near] / hi - 1), abs(m[far] / hi - 1), p=p, q=near)

    for p, r in ((2.0, 4.0), (1.5, 3.0), (3.0, 6.0)):
        C = L_.sobolev_poincare_constant(p, r, 1.0)
        q = r / (r - p)
        rep.rel_equal("sobolev_vs_best_constant", C,
                      L_.best_constant(L_.LyapunovInput(p, q)).best_constant ** (-1 / p), 1e-10, p=p, r=r)
        for i in range(100):
            v = L_.random_trial_function(rng)
            rep.at_most("sobolev_poincare", L_.sobolev_quotient(v, p, r), C * (1 + 1e-3), p=p, r=r, trial=i)
    return rep


_RUNNERS = {"gtf": run_gtf, "bvp": run_bvp, "hyper": run_hyper, "lyapunov": run_lyapunov}


def run(suite: str = "all", seed: int = 0, config: NumericsConfig = DEFAULT) -> VerificationReport:
    """Run one suite, or every suite in a fixed order for ``"all"``."""
    if suite == "all":
        rep = VerificationReport("all", seed)
        for name in SUITES:
            rep.extend(_RUNNERS[name](seed, config))
        return rep
    if suite not in _RUNNERS:
        raise KeyError(f"unknown suite {suite!r}; choose from all, {', '.join(SUITES)}")
    return _RUNNERS[suite](seed, config)
