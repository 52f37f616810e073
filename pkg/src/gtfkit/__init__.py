"""Generalized trigonometric functions and their applications.

Two-parameter sine, cosine and pi built on the incomplete beta function,
closed-form solutions of two boundary value problems, hypergeometric and
integral identities, and best constants of Lyapunov and Sobolev-Poincare
type inequalities for the one-dimensional p-Laplacian.
"""

from .bvp import (
    ExtremumReport,
    GeneralProblem,
    NonlocalProblem,
    general_extremum,
    general_residual,
    general_solution,
    median_trichotomy,
    nonlocal_residual,
    phi_extremum,
    phi_r,
)
from .config import ConvergenceError, DomainError, NumericsConfig
from .gtf import GtfPoint, ParamPair, asin_pq, conjugate, cos_pq, gtf_point, pi_pq, sin_cos, sin_pq
from .hyper import IdentityCheck
from .lyapunov import (
    INF,
    LyapunovInput,
    LyapunovResult,
    SampledFunction,
    best_constant,
    extremal_solution,
    extremal_weight,
    rayleigh_J,
    sobolev_poincare_constant,
)
from .quadrature import tanh_sinh
from .special import BetaArgs, HypArgs, beta, gauss_2f1, ln_gamma, reg_inc_beta, reg_inc_beta_inv
from .verify import VerificationReport

__version__ = "0.1.0"
