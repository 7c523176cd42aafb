"""Regularized Euler beta on its critical lines and its Dirac-delta limits.

The library computes B(a+ix, b+iy) in the region where the defining
integral diverges pointwise but the gamma-quotient formula still defines a
distribution, and verifies the resulting weak identities (2 pi delta, the
shifted binomial-coefficient family, the Sokhotski decomposition, the
two-variable limits) by quadrature against continuous test functions.
"""

from .errors import (
    DeltaBetaError,
    DomainError,
    PoleError,
    QuadratureError,
    SupportError,
)
from .special_functions import EULER_GAMMA, digamma, gamma, log_gamma, trigamma
from .regularized_beta import (
    X_MAX,
    BetaArgs,
    FactorizedBeta,
    beta,
    beta_diag_regularized,
    beta_offdiag_regularized,
    beta_shifted_regularized,
    factorize_diag,
    smooth_factor,
    smooth_factor_eps_derivative,
    smooth_factor_eps_second_derivative,
    smooth_factor_second_derivative_bound,
)
from .delta_kernels import (
    Kernel,
    dirichlet_kernel,
    kernel_action,
    lorentz_kernel,
    measured_normalization,
)
from .quadrature import (
    IntegrandKind,
    IntegrandSpec,
    QuadratureConfig,
    TruncationParams,
    beta_integral_direct,
    integrate_adaptive,
    integrate_pv,
    integrate_pv_complex,
    truncated_fourier,
)
from .test_functions import REGISTRY, TestFunction, get_test_function, reflected
from .weak_limits import (
    ConvergenceRecord,
    DistributionalResult,
    SweepResult,
    THEOREM_LIMIT,
    action_lemma,
    action_theorem,
    action_truncated_fourier,
    offdiag_limit_result,
    sweep,
    verify_corollary2,
    verify_corollary3,
    verify_diag_limit,
    verify_offdiag_limit,
    verify_sokhotski,
)

__version__ = "0.1.0"
