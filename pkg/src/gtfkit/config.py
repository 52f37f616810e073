"""Numerical settings shared by the iterative evaluators."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields

ENV_PREFIX = "GTFKIT_"


class DomainError(ValueError):
    """An argument lies outside the domain of the requested function."""


class ConvergenceError(ArithmeticError):
    """An iterative evaluator did not meet its stopping rule within ``max_iter``."""


@dataclass(frozen=True)
class NumericsConfig:
    """Tolerances and iteration caps.

    Parameters
    ----------
    abs_tol : float
        Absolute tolerance, e.g. on ``|I_x(a, b) - y|`` for the inverse beta.
    rel_tol : float
        Relative stopping tolerance for series and quadrature refinement.
    max_iter : int
        Cap on series terms, continued-fraction steps and root-finder steps.
    quad_points : int
        Number of nodes of the coarsest tanh-sinh level.
    """

    abs_tol: float = 1e-13
    rel_tol: float = 1e-12
    max_iter: int = 500
    quad_points: int = 61

    def __post_init__(self) -> None:
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise DomainError("abs_tol and rel_tol must be positive")
        if self.max_iter < 1:
            raise DomainError("max_iter must be >= 1")
        if self.quad_points < 3:
            raise DomainError("quad_points must be >= 3")

    @classmethod
    def from_env(cls, environ=None) -> "NumericsConfig":
        """Build a config from ``GTFKIT_ABS_TOL``-style overrides."""
        environ = os.environ if environ is None else environ
        kwargs = {}
        for f in fields(cls):
            raw = environ.get(ENV_PREFIX + f.name.upper())
            if raw is not None:
                kwargs[f.name] = int(raw) if f.type in (int, "int") else float(raw)
        return cls(**kwargs)


DEFAULT = NumericsConfig()
