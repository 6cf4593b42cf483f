"""Exponential quadrature rules for linear fractional differential equations.

Solves D^alpha y + lam*y = f(t) (Caputo derivative, 0 < alpha < 2, scalar or
system form) with convolution-quadrature steppers whose weights are built
from generalized Mittag-Leffler kernels via best rational approximation of
the exponential, plus classical product-integration baselines and a
convergence benchmark harness.
"""

from .errors import (
    ExpquadError,
    NonFiniteStateError,
    SeriesConvergenceError,
    SingularDenominatorError,
    UnsupportedDegreeError,
    WeightAccuracyError,
)
from .laplace import RationalApproximation, build_rational_approx
from .quadrature import NodeSet, WeightTable, build_weight_table
from .solvers import (
    LinearFDEProblem,
    Trajectory,
    mol_discretize,
    solve_exponential_cq,
)
from .baselines import solve_pece, solve_pi_trapezoidal
from .harness import (
    ConvergenceReport,
    exact_pde_semidiscrete,
    exact_t1,
    pde_problem,
    reference_fine_grid,
    run_convergence,
    t1_problem,
    t2_problem,
)

__version__ = "0.1.0"

__all__ = [
    "ExpquadError", "SeriesConvergenceError", "UnsupportedDegreeError",
    "SingularDenominatorError", "WeightAccuracyError", "NonFiniteStateError",
    "RationalApproximation", "build_rational_approx",
    "NodeSet", "WeightTable", "build_weight_table",
    "LinearFDEProblem", "Trajectory", "solve_exponential_cq", "mol_discretize",
    "solve_pece", "solve_pi_trapezoidal",
    "t1_problem", "t2_problem", "pde_problem",
    "exact_t1", "exact_pde_semidiscrete", "reference_fine_grid",
    "run_convergence", "ConvergenceReport",
]
