"""Kernel families: scaling, normalization, and weak convergence to phi(0)."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from deltabeta import (
    DomainError,
    QuadratureConfig,
    dirichlet_kernel,
    kernel_action,
    lorentz_kernel,
    measured_normalization,
)
from deltabeta.test_functions import REGISTRY, TestFunction

LORENTZ_HALF_WIDTH_50 = 0.99872676215291348927  # (2/pi) atan(500)
LORENTZ_ACTION_GAUSSIAN_MILLI = 0.99887262008115140863  # 30-digit quadrature

# quadrature noise floor for the monotonicity checks: the Gaussian cases
# converge to ~1e-12 already at omega = 10, where strict decrease would
# compare integrator noise with itself
NOISE = 1e-9


class TestLorentzKernel:
    def test_peak_value(self):
        assert lorentz_kernel(1.0).evaluate(0.0) == pytest.approx(1 / math.pi)

    def test_peak_scaling(self):
        assert lorentz_kernel(0.01).evaluate(0.0) == pytest.approx(
            100 / math.pi, rel=1e-13
        )
        assert lorentz_kernel(0.01).evaluate(0.0) == pytest.approx(31.8309886, rel=1e-8)

    def test_normalization_closed_form(self, cfg):
        measured = measured_normalization(lorentz_kernel(0.1), 50.0, cfg)
        assert measured == pytest.approx(LORENTZ_HALF_WIDTH_50, rel=1e-12)
        # analytic tail beyond [-T, T] is 2 eps/(pi T) = 1.27e-3 here
        assert measured == pytest.approx(1.0, abs=2e-3)

    def test_normalization_approaches_one(self, cfg):
        kern = lorentz_kernel(0.05)
        gaps = [abs(1 - measured_normalization(kern, t, cfg)) for t in (10, 100, 1000)]
        assert gaps[2] < gaps[1] < gaps[0]
        assert gaps[2] < 1e-4

    def test_eps_validation(self):
        with pytest.raises(DomainError):
            lorentz_kernel(0.0)
        with pytest.raises(DomainError):
            lorentz_kernel(-1.0)


class TestDirichletKernel:
    def test_removable_singularity(self):
        assert dirichlet_kernel(1.0).evaluate(0.0) == pytest.approx(1 / math.pi)
        assert dirichlet_kernel(200.0).evaluate(0.0) == pytest.approx(200 / math.pi)

    def test_sine_zero(self):
        assert dirichlet_kernel(10.0).evaluate(math.pi / 10) == pytest.approx(
            0.0, abs=1e-15
        )

    def test_action_on_gaussian_high_frequency(self, cfg):
        action = kernel_action(dirichlet_kernel(200.0), REGISTRY["gaussian"], cfg)
        assert action == pytest.approx(1.0, abs=5e-2)

    def test_omega_validation(self):
        with pytest.raises(DomainError):
            dirichlet_kernel(0.0)


class TestKernelAction:
    def test_constant_phi_closed_form(self, cfg):
        phi = TestFunction(lambda t: np.ones_like(np.atleast_1d(t)), (-1, 1), 1.0, "one")
        for eps in (1e-1, 1e-2, 1e-3):
            action = kernel_action(lorentz_kernel(eps), phi, cfg)
            assert action == pytest.approx(2 / math.pi * math.atan(1 / eps), rel=1e-10)
        assert kernel_action(lorentz_kernel(1e-3), phi, cfg) == pytest.approx(
            0.99936338043983888, rel=1e-10
        )

    def test_zero_phi(self, cfg):
        phi = TestFunction(lambda t: np.zeros_like(np.atleast_1d(t)), (-1, 1), 0.0, "zero")
        assert kernel_action(lorentz_kernel(0.01), phi, cfg) == 0.0
        assert kernel_action(dirichlet_kernel(10.0), phi, cfg) == 0.0

    def test_lorentz_gaussian_small_eps(self, cfg):
        action = kernel_action(lorentz_kernel(1e-3), REGISTRY["gaussian"], cfg)
        assert action == pytest.approx(LORENTZ_ACTION_GAUSSIAN_MILLI, rel=1e-10)
        assert action == pytest.approx(1.0, abs=2e-3)


class TestWeakConvergence:
    @pytest.mark.parametrize("label", sorted(REGISTRY))
    def test_lorentz_sweep(self, label, cfg):
        phi = REGISTRY[label]
        errs = [
            abs(kernel_action(lorentz_kernel(e), phi, cfg) - phi.value_at_zero)
            for e in (1e-1, 1e-2, 1e-3)
        ]
        assert errs[2] < errs[1] < errs[0]
        assert errs[2] < 5e-2

    @pytest.mark.parametrize("label", sorted(REGISTRY))
    def test_dirichlet_sweep(self, label, cfg):
        phi = REGISTRY[label]
        errs = [
            abs(kernel_action(dirichlet_kernel(w), phi, cfg) - phi.value_at_zero)
            for w in (10.0, 50.0, 200.0)
        ]
        assert errs[1] <= errs[0] + NOISE
        assert errs[2] <= errs[1] + NOISE
        assert errs[2] < 5e-2


class TestKernelShape:
    @given(
        eps=st.floats(min_value=1e-3, max_value=10.0),
        x=st.floats(min_value=-100.0, max_value=100.0),
    )
    @settings(max_examples=200, deadline=None)
    def test_rescaling_law(self, eps, x):
        kern = lorentz_kernel(eps)
        assert kern.evaluate(x) == kern.profile(x / eps) / eps

    @given(x=st.floats(min_value=0.0, max_value=50.0))
    @settings(max_examples=100, deadline=None)
    def test_evenness(self, x):
        for kern in (lorentz_kernel(0.3), dirichlet_kernel(7.0)):
            assert kern.evaluate(x) == kern.evaluate(-x)

    def test_profile_bounded(self):
        xs = np.linspace(-1000, 1000, 20001)
        for kern in (lorentz_kernel(1.0), dirichlet_kernel(1.0)):
            assert float(np.max(np.abs(kern.profile(xs)))) <= 1 / math.pi + 1e-15
