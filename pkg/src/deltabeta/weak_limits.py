"""Verification harness pairing regularized betas with test functions.

Every identity is checked in the weak sense: the regularized family is
integrated against a continuous test function phi and the result compared
with the predicted sampling of phi at 0.  Targets always use the declared
``value_at_zero``, never a numerically located maximum, so a delta that
accidentally samples at the peak of phi is caught.

Outer integrals run over the support clipped to |x| <= 40; the integrand
decays like exp(-pi |x|), so the clipped tail is far below every tolerance
used here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import DeltaBetaError, DomainError, SupportError
from .quadrature import (
    DEFAULT_CONFIG,
    QuadratureConfig,
    integrate_adaptive,
    integrate_pv_complex,
    truncated_fourier,
)
from .regularized_beta import (
    beta_diag_regularized,
    beta_offdiag_regularized,
    beta_shifted_regularized,
    smooth_factor,
)
from .special_functions import log_gamma
from .test_functions import TestFunction

__all__ = [
    "OUTER_TRUNCATION",
    "ConvergenceRecord",
    "DistributionalResult",
    "SweepResult",
    "THEOREM_LIMIT",
    "offdiag_limit_result",
    "action_theorem",
    "action_lemma",
    "action_truncated_fourier",
    "verify_corollary2",
    "verify_corollary3",
    "verify_sokhotski",
    "verify_offdiag_limit",
    "verify_diag_limit",
    "sweep",
]

OUTER_TRUNCATION = 40.0

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class ConvergenceRecord:
    """One row of a regularization sweep."""

    eps: float
    action_re: float
    action_im: float
    target: float
    abs_err: float
    rel_err: float
    eps_b: Optional[float] = None

    @property
    def action(self) -> complex:
        return complex(self.action_re, self.action_im)


def _record(eps, action, target, eps_b=None) -> ConvergenceRecord:
    action = complex(action)
    target = float(target)
    abs_err = abs(action - target)
    if target != 0.0:
        rel_err = abs_err / abs(target)
    else:
        rel_err = 0.0 if abs_err == 0.0 else math.inf
    return ConvergenceRecord(
        eps=float(eps),
        action_re=action.real,
        action_im=action.imag,
        target=target,
        abs_err=abs_err,
        rel_err=rel_err,
        eps_b=None if eps_b is None else float(eps_b),
    )


@dataclass(frozen=True)
class DistributionalResult:
    """Declarative right-hand side: delta coefficients, PV flags, prefactor."""

    delta_x_coeff: float
    delta_y_coeff: float
    pv_x_present: bool
    pv_y_present: bool
    prefactor: Callable[[np.ndarray, np.ndarray], np.ndarray]


def _unit_prefactor(x, y):
    return np.ones_like(np.asarray(x, dtype=float) + np.asarray(y, dtype=float))


#: The one-variable diagonal limit: 2 pi delta(x), no principal values.
THEOREM_LIMIT = DistributionalResult(TWO_PI, 0.0, False, False, _unit_prefactor)


def _offdiag_prefactor(x, y):
    xa = np.asarray(x, dtype=float)
    ya = np.asarray(y, dtype=float)
    return np.exp(
        log_gamma(1.0 + 1j * xa)
        + log_gamma(1.0 + 1j * ya)
        - log_gamma(1.0 + 1j * (xa + ya))
    )


def offdiag_limit_result() -> DistributionalResult:
    """The two-variable limit: pi[delta(x)+delta(y)] minus prefactored PVs."""
    return DistributionalResult(math.pi, math.pi, True, True, _offdiag_prefactor)


def _action_interval(phi: TestFunction, *, require_origin=True):
    lo = max(phi.support[0], -OUTER_TRUNCATION)
    hi = min(phi.support[1], OUTER_TRUNCATION)
    if require_origin and not (lo < 0 < hi):
        raise SupportError(
            f"support ({phi.support[0]}, {phi.support[1]}) of {phi.label!r} "
            "does not contain 0"
        )
    return lo, hi


def action_theorem(eps, phi, cfg=DEFAULT_CONFIG, *, require_origin=True):
    """Action of B(eps+ix, eps-ix) on phi; target 2 pi phi(0).

    With ``require_origin=False`` a support not containing 0 is allowed and
    the target becomes 0 (the delta has nothing to sample there).
    """
    lo, hi = _action_interval(phi, require_origin=require_origin)
    action, _ = integrate_adaptive(
        lambda t: phi.evaluate(t) * beta_diag_regularized(eps, t), lo, hi, cfg
    )
    target = TWO_PI * phi.value_at_zero if phi.contains_origin else 0.0
    return _record(eps, action, target)


def action_lemma(eps, f_func, phi, cfg=DEFAULT_CONFIG):
    """Action of f(eps, x) * eps/(eps^2+x^2) on phi; target pi f(0,0) phi(0).

    ``f_func(eps, x)`` must accept an ndarray of x and may return complex
    values with vanishing imaginary part (the target uses the real part of
    f(0, 0)).
    """
    if not eps > 0:
        raise DomainError(f"eps must be positive, got {eps}")
    lo, hi = _action_interval(phi)

    def integrand(t):
        return phi.evaluate(t) * f_func(eps, t) * (eps / (eps * eps + t * t))

    action, _ = integrate_adaptive(integrand, lo, hi, cfg)
    f00 = float(np.real(np.atleast_1d(f_func(0.0, 0.0))[0]))
    target = math.pi * f00 * phi.value_at_zero
    return _record(eps, action, target)


def action_truncated_fourier(cut, phi, cfg=DEFAULT_CONFIG):
    """Action of the truncated-Fourier closed form with t-cuts mu = lam = cut.

    The inner integral int_mu^{1-lam} t^(ix-1) (1-t)^(-ix-1) dt equals the
    truncated Fourier integral with xi-limits ln((1-cut)/cut) on both
    sides, evaluated in closed form; the target is 2 pi phi(0).
    """
    if not (0 < cut < 0.5):
        raise DomainError(f"t-cut must lie in (0, 1/2), got {cut}")
    lo, hi = _action_interval(phi)
    xi_cut = math.log((1 - cut) / cut)

    def integrand(t):
        return phi.evaluate(t) * truncated_fourier(t, xi_cut, xi_cut)

    action, _ = integrate_adaptive(integrand, lo, hi, cfg)
    return _record(cut, action, TWO_PI * phi.value_at_zero)


def verify_corollary2(eps_route, trunc_route, phi, cfg=DEFAULT_CONFIG):
    """Both orders of limit and integration; returns one record per route.

    Route A regularizes the exponents (the gamma-quotient family) and is
    swept over ``eps_route``; route B truncates the t-integral (closed
    Fourier form) and is swept over ``trunc_route``.  Each returned record
    is the finest point of its route.
    """
    sweep_a = sweep(action_theorem, eps_route, phi, cfg)
    sweep_b = sweep(action_truncated_fourier, trunc_route, phi, cfg)
    if not sweep_a.records or not sweep_b.records:
        failures = sweep_a.failures + sweep_b.failures
        raise DeltaBetaError(f"a route produced no records: {failures}")
    return sweep_a.records[-1], sweep_b.records[-1]


def verify_corollary3(eps, n, k, phi, cfg=DEFAULT_CONFIG):
    """Action of the shifted family; target (n+k)!/(n! k!) 2 pi phi(0).

    Also checks the swap symmetry B(eps+ix-n, eps-ix-k) =
    B(eps-ix-k, eps+ix-n) pointwise on a grid before integrating.
    """
    lo, hi = _action_interval(phi)
    grid = np.linspace(lo, hi, 41)
    direct = beta_shifted_regularized(eps, grid, n, k)
    swapped = beta_shifted_regularized(eps, -grid, k, n)
    scale = float(np.max(np.abs(direct)))
    if float(np.max(np.abs(direct - swapped))) > 1e-10 * scale:
        raise DeltaBetaError("argument-swap symmetry violated beyond rounding")

    action, _ = integrate_adaptive(
        lambda t: phi.evaluate(t) * beta_shifted_regularized(eps, t, n, k), lo, hi, cfg
    )
    coeff = math.comb(n + k, n)
    return _record(eps, action, coeff * TWO_PI * phi.value_at_zero)


def verify_sokhotski(alpha, phi, cfg=DEFAULT_CONFIG):
    """Sokhotski split of int phi(x)/(x - i alpha) dx.

    The stored action is -i (integral - PV), whose limit is the real
    number pi phi(0); abs_err is then the full complex defect
    |integral - i pi phi(0) - PV|.
    """
    if not alpha > 0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    lo, hi = _action_interval(phi)
    full, _ = integrate_adaptive(
        lambda t: phi.evaluate(t) / (t - 1j * alpha), lo, hi, cfg
    )
    pv = integrate_pv_complex(phi, lo, hi, cfg).real
    action = -1j * (full - pv)
    return _record(alpha, action, math.pi * phi.value_at_zero)


def _axis_config(cfg: QuadratureConfig) -> QuadratureConfig:
    # per-axis tolerance sqrt(total) for the tensor-product 2D quadrature
    return QuadratureConfig(
        abs_tol=math.sqrt(cfg.abs_tol),
        rel_tol=math.sqrt(cfg.rel_tol),
        max_subdivisions=cfg.max_subdivisions,
        pv_excision=cfg.pv_excision,
    )


def verify_offdiag_limit(
    a,
    b,
    phi_pair: Tuple[TestFunction, TestFunction],
    cfg=DEFAULT_CONFIG,
    *,
    limit: Optional[DistributionalResult] = None,
    band_width=1e-3,
):
    """Two-variable limit check for separable phi(x, y) = g(x) h(y).

    Compares the 2D action of B(a+ix, b+iy) with the assembled right-hand
    side: delta terms pi[g(0) int h + h(0) int g] plus the prefactored
    principal-value terms, the latter computed with the x + y = 0 line
    excised by a band of width ``band_width``.

    The stored action is (2D action - PV-side terms) and the target is the
    real delta side, so abs_err = |2D action - assembled RHS|.
    """
    if limit is None:
        limit = offdiag_limit_result()
    g, h = phi_pair
    gx_lo, gx_hi = _action_interval(g)
    hy_lo, hy_hi = _action_interval(h)
    axis_cfg = _axis_config(cfg)

    def inner_for(x):
        val, _ = integrate_adaptive(
            lambda ys: h.evaluate(ys) * beta_offdiag_regularized(a, b, float(x), ys),
            hy_lo,
            hy_hi,
            axis_cfg,
        )
        return val

    def outer(xs):
        return g.evaluate(xs) * np.array([inner_for(x) for x in np.atleast_1d(xs)])

    action_2d, _ = integrate_adaptive(outer, gx_lo, gx_hi, axis_cfg)

    int_g, _ = integrate_adaptive(g.evaluate, gx_lo, gx_hi, cfg)
    int_h, _ = integrate_adaptive(h.evaluate, hy_lo, hy_hi, cfg)
    g0 = g.value_at_zero
    h0 = h.value_at_zero
    delta_side = limit.delta_x_coeff * g0 * int_h.real + limit.delta_y_coeff * h0 * int_g.real

    half_band = 0.5 * band_width
    pv_side = 0j
    if limit.pv_x_present:

        def pv_in_x(y):
            return integrate_pv_complex(
                lambda xs: g.evaluate(xs) * limit.prefactor(xs, float(y)),
                gx_lo,
                gx_hi,
                axis_cfg,
                exclude=(-float(y) - half_band, -float(y) + half_band),
            )

        val, _ = integrate_adaptive(
            lambda ys: h.evaluate(ys)
            * np.array([pv_in_x(y) for y in np.atleast_1d(ys)]),
            hy_lo,
            hy_hi,
            axis_cfg,
        )
        pv_side += -1j * val
    if limit.pv_y_present:

        def pv_in_y(x):
            return integrate_pv_complex(
                lambda ys: h.evaluate(ys) * limit.prefactor(float(x), ys),
                hy_lo,
                hy_hi,
                axis_cfg,
                exclude=(-float(x) - half_band, -float(x) + half_band),
            )

        val, _ = integrate_adaptive(
            lambda xs: g.evaluate(xs)
            * np.array([pv_in_y(x) for x in np.atleast_1d(xs)]),
            gx_lo,
            gx_hi,
            axis_cfg,
        )
        pv_side += -1j * val

    return _record(a, action_2d - pv_side, delta_side, eps_b=b)


def verify_diag_limit(a, b, phi, cfg=DEFAULT_CONFIG):
    """Action of B(a+ix, b-ix) on phi; target 2 pi phi(0) for any path a, b -> 0."""
    lo, hi = _action_interval(phi)
    action, _ = integrate_adaptive(
        lambda t: phi.evaluate(t) * beta_offdiag_regularized(a, b, t, -t), lo, hi, cfg
    )
    return _record(a, action, TWO_PI * phi.value_at_zero, eps_b=b)


@dataclass(frozen=True)
class SweepResult:
    """Records of a regularization sweep plus the convergence flags."""

    records: List[ConvergenceRecord]
    failures: List[Tuple[object, str]]
    rel_err_monotone: Optional[bool]
    final_rel_err: Optional[float]


def sweep(op, schedule: Sequence, phi, cfg=DEFAULT_CONFIG) -> SweepResult:
    """Run ``op(value, phi, cfg)`` over a decreasing schedule.

    Per-point errors are collected without aborting the sweep.  Records are
    sorted by decreasing regularization value before the monotonicity flag
    is computed, so merge order does not matter.
    """
    values = list(schedule)
    scalars = [v for v in values if np.ndim(v) == 0]
    if any(not float(v) > 0 for v in scalars):
        raise DomainError("schedule values must be positive")
    if len(scalars) == len(values) and any(
        not float(u) > float(v) for u, v in zip(values, values[1:])
    ):
        raise DomainError("schedule must be strictly decreasing")

    records = []
    failures = []
    for value in values:
        try:
            records.append(op(value, phi, cfg))
        except DeltaBetaError as exc:
            failures.append((value, str(exc)))
    records.sort(key=lambda r: -r.eps)

    monotone = None
    if len(records) >= 2:
        monotone = all(
            r2.rel_err < r1.rel_err for r1, r2 in zip(records, records[1:])
        )
    final = records[-1].rel_err if records else None
    return SweepResult(records, failures, monotone, final)
