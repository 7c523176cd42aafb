"""Gamma/log-gamma/digamma/trigamma values, identities, and error handling."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from deltabeta import (
    DomainError,
    EULER_GAMMA,
    PoleError,
    digamma,
    gamma,
    log_gamma,
    trigamma,
)

# Reference values, frozen from 30-digit evaluations.
SQRT_PI = 1.7724538509055160273
PI_OVER_SINH_PI = 0.27202905498213316295
DIGAMMA_HALF = -1.9635100260214234794  # -euler_gamma - 2 ln 2
LOG_362880 = 12.801827480081469611
PI2_OVER_6 = 1.6449340668482264365

# 200-point complex grid; the Im spacing keeps every point off the real
# axis, so reflection never lands on a pole of gamma(1-z).
GRID = (
    np.linspace(0.1, 5.0, 20)[:, None] + 1j * np.linspace(-10.0, 10.0, 10)[None, :]
).ravel()


def basel_series(shift=0):
    """Independent oracle for trigamma at integers: sum 1/(n+shift)^2.

    Plain partial sum plus the Euler-Maclaurin tail; accurate to ~1e-20
    with N = 10^4.
    """
    n_terms = 10_000
    n = np.arange(1, n_terms + 1, dtype=float) + shift
    partial = float(np.sum(1.0 / (n * n)))
    tail_start = n_terms + shift
    return partial + 1.0 / tail_start - 1.0 / (2 * tail_start**2) + 1.0 / (
        6 * tail_start**3
    )


class TestGammaValues:
    def test_gamma_one(self):
        assert gamma(1 + 0j) == pytest.approx(1.0, rel=1e-12)

    def test_gamma_five(self):
        assert gamma(5 + 0j) == pytest.approx(24.0, rel=1e-12)

    def test_gamma_half(self):
        assert gamma(0.5 + 0j) == pytest.approx(SQRT_PI, rel=1e-13)

    def test_gamma_conjugate_pair_product(self):
        # |Gamma(1+ix)|^2 = pi x / sinh(pi x) at x = 1
        value = gamma(1 + 1j) * gamma(1 - 1j)
        assert value.real == pytest.approx(PI_OVER_SINH_PI, rel=1e-12)
        assert value.imag == pytest.approx(0.0, abs=1e-15)

    def test_matches_high_precision_reference(self):
        mp = pytest.importorskip("mpmath")
        mp.mp.dps = 30
        rng = np.random.default_rng(20240811)
        for _ in range(60):
            z = complex(rng.uniform(0.05, 12), rng.uniform(-12, 12))
            ref = complex(mp.gamma(z))
            assert gamma(z) == pytest.approx(ref, rel=5e-13)

    def test_negative_half_plane_reflection(self):
        mp = pytest.importorskip("mpmath")
        mp.mp.dps = 30
        for z in (-0.5 + 0.3j, -2.3 - 4j, -4.6 + 0.1j):
            ref = complex(mp.gamma(z))
            assert gamma(z) == pytest.approx(ref, rel=1e-12)


class TestLogGamma:
    def test_log_gamma_one_and_two(self):
        assert abs(log_gamma(1 + 0j)) < 1e-13
        assert abs(log_gamma(2 + 0j)) < 1e-13

    def test_log_gamma_ten(self):
        assert log_gamma(10 + 0j).real == pytest.approx(LOG_362880, rel=1e-13)

    def test_exp_log_gamma_is_gamma(self):
        zs = [
            z
            for z in (
                np.linspace(0.05, 19, 25)[:, None]
                + 1j * np.linspace(-19, 19, 25)[None, :]
            ).ravel()
            if abs(z) <= 20
        ]
        zs = np.array(zs)
        rel = np.abs(np.exp(log_gamma(zs)) - gamma(zs)) / np.abs(gamma(zs))
        assert float(np.max(rel)) < 1e-12

    def test_continuous_on_right_half_plane(self):
        # walk a vertical line crossing the Lanczos/recurrence seam and a
        # horizontal line with growing imaginary part: no 2 pi jumps
        for path in (
            0.3 + 1j * np.linspace(-15, 15, 2001),
            np.linspace(0.05, 19, 2001) + 6j,
            0.7 + 1j * np.linspace(-15, 15, 2001),
        ):
            vals = log_gamma(path)
            steps = np.abs(np.diff(vals))
            assert float(np.max(steps)) < 0.3


class TestDigammaTrigamma:
    def test_digamma_one_is_minus_euler_gamma(self):
        assert digamma(1 + 0j).real == pytest.approx(-EULER_GAMMA, abs=1e-13)

    def test_digamma_two(self):
        assert digamma(2 + 0j).real == pytest.approx(1 - EULER_GAMMA, abs=1e-13)

    def test_digamma_half(self):
        assert digamma(0.5 + 0j).real == pytest.approx(DIGAMMA_HALF, rel=1e-13)

    def test_trigamma_one_against_series(self):
        oracle = basel_series()
        assert oracle == pytest.approx(PI2_OVER_6, abs=1e-15)
        assert trigamma(1 + 0j).real == pytest.approx(oracle, rel=1e-12)

    def test_trigamma_two(self):
        assert trigamma(2 + 0j).real == pytest.approx(PI2_OVER_6 - 1, rel=1e-12)

    def test_trigamma_half_against_duplication(self):
        # psi'(1/2) = 3 psi'(1) from the duplication identity
        assert trigamma(0.5 + 0j).real == pytest.approx(3 * basel_series(), rel=1e-12)

    def test_against_high_precision_reference(self):
        mp = pytest.importorskip("mpmath")
        mp.mp.dps = 30
        rng = np.random.default_rng(7)
        for _ in range(40):
            z = complex(rng.uniform(0.1, 10), rng.uniform(-10, 10))
            assert digamma(z) == pytest.approx(complex(mp.digamma(z)), rel=1e-12)
            assert trigamma(z) == pytest.approx(
                complex(mp.polygamma(1, mp.mpc(z))), rel=1e-12
            )


class TestGridInvariants:
    def test_recurrence(self):
        g = gamma(GRID)
        g1 = gamma(GRID + 1)
        rel = np.abs(g1 - GRID * g) / np.abs(g1)
        assert float(np.max(rel)) < 1e-11

    def test_reflection(self):
        lhs = gamma(GRID) * gamma(1 - GRID) * np.sin(np.pi * GRID) / np.pi
        assert float(np.max(np.abs(lhs - 1))) < 1e-10

    def test_conjugate_symmetry(self):
        assert np.array_equal(gamma(np.conj(GRID)), np.conj(gamma(GRID)))

    def test_digamma_recurrence(self):
        err = np.abs(digamma(GRID + 1) - digamma(GRID) - 1 / GRID)
        assert float(np.max(err)) < 1e-10

    def test_trigamma_recurrence(self):
        err = np.abs(trigamma(GRID + 1) - trigamma(GRID) + 1 / GRID**2)
        assert float(np.max(err)) < 1e-10

    def test_digamma_matches_log_gamma_derivative(self):
        h = 1e-5
        fd = (log_gamma(GRID + h) - log_gamma(GRID - h)) / (2 * h)
        assert float(np.max(np.abs(digamma(GRID) - fd))) < 1e-6

    def test_trigamma_matches_digamma_derivative(self):
        h = 1e-5
        fd = (digamma(GRID + h) - digamma(GRID - h)) / (2 * h)
        assert float(np.max(np.abs(trigamma(GRID) - fd))) < 1e-6


class TestErrors:
    @pytest.mark.parametrize("bad", [0j, -1 + 0j, -2 + 0j, -7 + 0j, 1e-9 + 0j, -3 + 1e-10j])
    def test_pole_error(self, bad):
        with pytest.raises(PoleError):
            gamma(bad)

    @pytest.mark.parametrize("func", [gamma, log_gamma, digamma, trigamma])
    def test_pole_error_all_functions(self, func):
        with pytest.raises(PoleError):
            func(-4 + 0j)

    def test_pole_radius_configurable(self):
        assert gamma(1e-7 + 0j, pole_radius=1e-8) == pytest.approx(9999999.42, rel=1e-6)
        with pytest.raises(PoleError):
            gamma(1e-7 + 0j, pole_radius=1e-6)

    @pytest.mark.parametrize("bad", [complex("nan"), complex("inf"), float("nan")])
    def test_nonfinite_rejected(self, bad):
        with pytest.raises(DomainError):
            gamma(bad)
        with pytest.raises(DomainError):
            digamma(bad)


_BOX = st.builds(
    complex,
    st.floats(min_value=0.1, max_value=5.0),
    st.floats(min_value=-10.0, max_value=10.0),
)


class TestPropertyBased:
    @given(z=_BOX)
    @settings(max_examples=150, deadline=None)
    def test_recurrence_property(self, z):
        assert gamma(z + 1) == pytest.approx(z * gamma(z), rel=1e-11)

    @given(z=_BOX)
    @settings(max_examples=150, deadline=None)
    def test_conjugate_property(self, z):
        assert gamma(np.conj(z)) == complex(np.conj(gamma(z)))

    @given(z=_BOX)
    @settings(max_examples=100, deadline=None)
    def test_digamma_recurrence_property(self, z):
        assert digamma(z + 1) == pytest.approx(digamma(z) + 1 / z, rel=1e-10, abs=1e-10)
