"""Delta-approximating kernel families omega_eps(x) = eps^-1 eta(x/eps).

Two profiles ship: the Lorentzian eta(u) = 1/(pi (1+u^2)) and the
Dirichlet/sinc profile eta(u) = sin(u)/(pi u).  The Dirichlet family is
parameterized by the frequency omega = 1/eps, which is how its limits are
naturally stated; its x = 0 value omega/pi is filled analytically so
quadrature nodes may land exactly on 0.

Note the Dirichlet profile is not absolutely integrable, so its
normalization can only be observed through actions on smooth test
functions, never by absolute-value quadrature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DomainError
from .quadrature import DEFAULT_CONFIG, integrate_adaptive

__all__ = [
    "Kernel",
    "lorentz_kernel",
    "dirichlet_kernel",
    "kernel_action",
    "measured_normalization",
]


@dataclass(frozen=True)
class Kernel:
    """A rescaled profile: evaluate(x) = profile(x/scale)/scale."""

    profile: Callable[[np.ndarray], np.ndarray]
    scale: float
    normalization: float = 1.0
    label: str = ""

    def __post_init__(self):
        if not (math.isfinite(self.scale) and self.scale > 0):
            raise DomainError(f"kernel scale must be positive, got {self.scale}")

    def evaluate(self, x):
        arr = np.asarray(x, dtype=float)
        out = self.profile(arr / self.scale) / self.scale
        return float(out) if arr.ndim == 0 else out


def _lorentz_profile(u):
    return 1.0 / (np.pi * (1.0 + np.asarray(u, dtype=float) ** 2))


def _dirichlet_profile(u):
    # sin(u)/(pi u) with the removable singularity handled by sinc
    return np.sinc(np.asarray(u, dtype=float) / np.pi) / np.pi


def lorentz_kernel(eps):
    """omega_eps(x) = (pi eps)^-1 [1 + (x/eps)^2]^-1."""
    if not (math.isfinite(eps) and eps > 0):
        raise DomainError(f"eps must be positive, got {eps}")
    return Kernel(profile=_lorentz_profile, scale=float(eps), label="lorentz")


def dirichlet_kernel(omega):
    """omega_eps(x) = sin(omega x)/(pi x) with eps = 1/omega."""
    if not (math.isfinite(omega) and omega > 0):
        raise DomainError(f"omega must be positive, got {omega}")
    return Kernel(profile=_dirichlet_profile, scale=1.0 / float(omega), label="dirichlet")


def kernel_action(kern, phi, cfg=DEFAULT_CONFIG):
    """int phi(x) * kernel(x) dx over phi's support.

    As the kernel scale shrinks (frequency grows) this converges to
    phi(0) for continuous phi with 0 inside the support.
    """
    lo, hi = phi.support
    value, _ = integrate_adaptive(
        lambda t: phi.evaluate(t) * kern.evaluate(t), lo, hi, cfg
    )
    return float(value.real)


def measured_normalization(kern, half_width, cfg=DEFAULT_CONFIG):
    """int of the kernel over [-T, T]; tends to 1 as T grows (Lorentzian)."""
    if not half_width > 0:
        raise DomainError("half_width must be positive")
    value, _ = integrate_adaptive(kern.evaluate, -half_width, half_width, cfg)
    return float(value.real)
