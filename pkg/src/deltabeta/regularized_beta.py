"""The Euler beta function and its regularized families on the critical lines.

Everything here is a gamma quotient evaluated as exp of signed log-gamma
sums: |Gamma(eps + ix)| decays like exp(-pi|x|/2), so direct quotients
underflow long before the log route loses accuracy.  The default guard
|x| <= 50 keeps the products representable.

The diagonal family B(eps+ix, eps-ix) factorizes exactly into a smooth
factor

    f(eps, x) = 2 Gamma(eps+ix+1) Gamma(eps-ix+1) / Gamma(2 eps + 1)

times the Lorentzian eps/(eps^2 + x^2); f and its eps-derivatives (closed
digamma/trigamma forms) are exposed so the factorization can be checked by
two independent routes.

The shifted family B(eps+ix-n, eps-ix-k) is always computed through the
reflection-formula identity

    B(eps+ix-n, eps-ix-k) =
        Gamma(1+n+k-2 eps) Gamma(1-eps-ix) Gamma(1-eps+ix)
        / [Gamma(1+n-eps-ix) Gamma(1+k-eps+ix) Gamma(1-2 eps)]
        * B(eps+ix, eps-ix),

never by direct gamma evaluation at the near-pole points eps+ix-n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PoleError
from .special_functions import (
    DEFAULT_POLE_RADIUS,
    digamma,
    log_gamma,
    trigamma,
)

__all__ = [
    "X_MAX",
    "BetaArgs",
    "FactorizedBeta",
    "beta",
    "beta_diag_regularized",
    "smooth_factor",
    "smooth_factor_eps_derivative",
    "smooth_factor_eps_second_derivative",
    "smooth_factor_second_derivative_bound",
    "factorize_diag",
    "beta_shifted_regularized",
    "beta_offdiag_regularized",
]

#: Largest |imaginary coordinate| accepted by the regularized families.
X_MAX = 50.0


def _check_x(x, name="x"):
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} must be finite")
    if np.any(np.abs(arr) > X_MAX):
        raise DomainError(f"|{name}| > {X_MAX} underflows; got {np.max(np.abs(arr))}")
    return arr


def _check_eps(eps, pole_radius=DEFAULT_POLE_RADIUS):
    if not (isinstance(eps, (int, float, np.floating, np.integer)) and math.isfinite(eps)):
        raise DomainError("eps must be a finite real number")
    if eps <= 0:
        raise DomainError(f"eps must be positive, got {eps}")
    if eps < pole_radius:
        raise PoleError(f"eps={eps} is within the pole radius {pole_radius:g} of 0")
    return float(eps)


@dataclass(frozen=True)
class BetaArgs:
    """The regularized argument pair (a + ix - n, b + iy - k)."""

    a: float
    b: float
    x: float = 0.0
    y: float = 0.0
    n: int = 0
    k: int = 0

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise DomainError("offsets a, b must be >= 0")
        if self.n < 0 or self.k < 0:
            raise DomainError("shifts n, k must be >= 0")
        if not (isinstance(self.n, (int, np.integer)) and isinstance(self.k, (int, np.integer))):
            raise DomainError("shifts n, k must be integers")

    @property
    def first(self) -> complex:
        return complex(self.a - self.n, self.x)

    @property
    def second(self) -> complex:
        return complex(self.b - self.k, self.y)


@dataclass(frozen=True)
class FactorizedBeta:
    """Smooth-factor / Lorentzian split of B(eps+ix, eps-ix).

    ``second_derivative_bound`` is a local central-difference estimate of
    |d2 f / d eps2| at this point; the module-level grid scan provides the
    global bound.
    """

    smooth_factor: complex
    lorentz_factor: float
    second_derivative_bound: float

    def product(self) -> complex:
        return self.smooth_factor * self.lorentz_factor


def beta(alpha, beta_arg, *, pole_radius=DEFAULT_POLE_RADIUS):
    """B(alpha, beta) = Gamma(alpha) Gamma(beta) / Gamma(alpha + beta).

    Computed through log-gamma differences; PoleError propagates when any
    of alpha, beta, alpha+beta is within the pole radius of 0, -1, -2, ...
    """
    a = complex(alpha)
    b = complex(beta_arg)
    return complex(
        np.exp(
            log_gamma(a, pole_radius=pole_radius)
            + log_gamma(b, pole_radius=pole_radius)
            - log_gamma(a + b, pole_radius=pole_radius)
        )
    )


def beta_diag_regularized(eps, x):
    """B(eps + ix, eps - ix) for eps > 0; real up to rounding.

    Vectorized over ``x``.
    """
    eps = _check_eps(eps)
    arr = _check_x(x)
    z = eps + 1j * arr
    out = np.exp(log_gamma(z) + log_gamma(np.conj(z)) - log_gamma(complex(2 * eps)))
    return complex(out) if np.asarray(x).ndim == 0 else out


def smooth_factor(eps, x):
    """f(eps, x) = 2 Gamma(eps+ix+1) Gamma(eps-ix+1) / Gamma(2 eps + 1).

    Defined for eps > -1/2 (the Lorentzian split needs its value and
    eps-derivatives in a two-sided neighborhood of 0).  Vectorized over x.
    """
    if not (math.isfinite(eps) and eps > -0.5 + DEFAULT_POLE_RADIUS):
        raise DomainError(f"smooth factor needs eps > -1/2, got {eps}")
    arr = _check_x(x)
    z = (1 + eps) + 1j * arr
    out = 2.0 * np.exp(
        log_gamma(z) + log_gamma(np.conj(z)) - log_gamma(complex(1 + 2 * eps))
    )
    return complex(out) if np.asarray(x).ndim == 0 else out


def smooth_factor_eps_derivative(eps, x):
    """d f / d eps in closed form: f * 2 [Re psi(eps+ix+1) - psi(2 eps+1)]."""
    f = np.real(smooth_factor(eps, x))
    arr = _check_x(x)
    psi_mix = np.real(digamma((1 + eps) + 1j * arr)) - np.real(
        digamma(complex(1 + 2 * eps))
    )
    out = f * 2.0 * psi_mix
    return float(out) if np.asarray(x).ndim == 0 else out


def smooth_factor_eps_second_derivative(eps, x):
    """d2 f / d eps2 in closed form.

    2 f { 2 [Re psi(eps+ix+1) - psi(2 eps+1)]^2
          + [Re psi'(eps+ix+1) - 2 psi'(2 eps+1)] }.
    """
    f = np.real(smooth_factor(eps, x))
    arr = _check_x(x)
    z = (1 + eps) + 1j * arr
    psi_mix = np.real(digamma(z)) - np.real(digamma(complex(1 + 2 * eps)))
    tri_mix = np.real(trigamma(z)) - 2.0 * np.real(trigamma(complex(1 + 2 * eps)))
    out = 2.0 * f * (2.0 * psi_mix**2 + tri_mix)
    return float(out) if np.asarray(x).ndim == 0 else out


def smooth_factor_second_derivative_bound(eps_values, x_values):
    """Empirical bound M = max |d2 f/d eps2| over a grid (must be finite)."""
    worst = 0.0
    for e in eps_values:
        vals = np.abs(smooth_factor_eps_second_derivative(float(e), np.asarray(x_values)))
        worst = max(worst, float(np.max(vals)))
    if not math.isfinite(worst):
        raise DomainError("second derivative bound is not finite on this grid")
    return worst


def factorize_diag(eps, x, *, fd_step=1e-3):
    """Split B(eps+ix, eps-ix) into smooth factor times Lorentzian.

    The returned ``second_derivative_bound`` is the local second central
    difference of the smooth factor in eps with step ``fd_step``.
    """
    eps = _check_eps(eps)
    xf = float(_check_x(x))
    sf = smooth_factor(eps, xf)
    lorentz = eps / (eps * eps + xf * xf)
    h = fd_step
    second = abs(
        (
            np.real(smooth_factor(eps + h, xf))
            - 2.0 * np.real(sf)
            + np.real(smooth_factor(eps - h, xf))
        )
        / (h * h)
    )
    return FactorizedBeta(
        smooth_factor=sf,
        lorentz_factor=lorentz,
        second_derivative_bound=float(second),
    )


def beta_shifted_regularized(eps, x, n, k):
    """B(eps + ix - n, eps - ix - k) through the reflection-formula route.

    Needs 0 < eps < 1/2 so no gamma argument in the identity hits a pole;
    n, k are nonnegative integers.  Vectorized over x.
    """
    if not isinstance(n, (int, np.integer)) or not isinstance(k, (int, np.integer)):
        raise DomainError("n and k must be integers")
    if n < 0 or k < 0:
        raise DomainError("n and k must be nonnegative")
    if eps >= 0.5:
        raise DomainError(f"need eps < 1/2 for the shifted family, got {eps}")
    eps = _check_eps(eps)
    arr = _check_x(x)
    ix = 1j * arr
    log_pref = (
        log_gamma(complex(1 + n + k - 2 * eps))
        + log_gamma((1 - eps) - ix)
        + log_gamma((1 - eps) + ix)
        - log_gamma((1 + n - eps) - ix)
        - log_gamma((1 + k - eps) + ix)
        - log_gamma(complex(1 - 2 * eps))
    )
    out = np.exp(log_pref) * beta_diag_regularized(eps, arr)
    return complex(out) if np.asarray(x).ndim == 0 else out


def beta_offdiag_regularized(a, b, x, y):
    """B(a + ix, b + iy) for a, b > 0 via the regular/singular split.

    The value is the regular gamma-quotient factor
    Gamma(a+ix+1) Gamma(b+iy+1) / Gamma(a+b+i(x+y)+1) times the partial
    fractions 1/(a+ix) + 1/(b+iy).  Vectorized over x and y (broadcast).
    """
    for v, name in ((a, "a"), (b, "b")):
        if not (math.isfinite(v) and v > 0):
            raise DomainError(f"{name} must be positive and finite, got {v}")
    ax = _check_x(x, "x")
    by = _check_x(y, "y")
    za = a + 1j * ax
    zb = b + 1j * by
    regular = np.exp(log_gamma(za + 1) + log_gamma(zb + 1) - log_gamma(za + zb + 1))
    out = regular * (1.0 / za + 1.0 / zb)
    if np.asarray(x).ndim == 0 and np.asarray(y).ndim == 0:
        return complex(out)
    return out
