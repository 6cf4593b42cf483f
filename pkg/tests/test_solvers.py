"""Exponential convolution quadrature solver and the MOL discretization."""

import math

import numpy as np
import pytest

from expquad import harness, solvers
from expquad.errors import NonFiniteStateError
from expquad.laplace import build_rational_approx
from expquad.quadrature import NodeSet
from expquad.solvers import LinearFDEProblem, mol_discretize, solve_exponential_cq

RAT = build_rational_approx(15)


def test_problem_validation():
    with pytest.raises(ValueError):
        LinearFDEProblem(alpha=2.0, coeff=1.0, forcing=lambda t: 0.0, t0=0.0,
                         T=1.0, init=(1.0, 0.0))
    with pytest.raises(ValueError):
        # alpha in (1, 2) needs two initial values
        LinearFDEProblem(alpha=1.5, coeff=1.0, forcing=lambda t: 0.0, t0=0.0,
                         T=1.0, init=(1.0,))
    prob = LinearFDEProblem(alpha=0.5, coeff=1.0, forcing=lambda t: 0.0, t0=0.0,
                            T=1.0, init=(1.0,))
    assert not prob.is_matrix
    assert prob.dim == 1


def test_step_count_divisibility():
    prob = harness.t1_problem(p=2.0, alpha=0.5)
    assert solvers.step_count(prob, 0.125) == 8
    with pytest.raises(ValueError):
        solvers.step_count(prob, 0.3)


def test_relaxation_matches_ml_function():
    # D^a y + lam y = 0, y(0) = y0 has y(t) = y0 E_a(-lam t^a)
    lam, y0 = 3.0, 2.0
    for alpha in (0.5, 1.5):
        init = (y0,) if alpha < 1 else (y0, 0.0)
        prob = LinearFDEProblem(alpha=alpha, coeff=lam, forcing=lambda t: 0.0,
                                t0=0.0, T=1.0, init=init)
        traj = solve_exponential_cq(prob, NodeSet.optimal(2), 1.0 / 32.0,
                                    rat=RAT)
        for t, y in zip(traj.times[1::8], traj.values[1::8]):
            ref = y0 * complex(harness._ml(alpha, 1.0, -lam * t**alpha)).real
            assert abs(y - ref) < 1e-12


def test_classical_ode_limit():
    # alpha = 1: y' + y = 0 integrates to exp(-t) essentially exactly
    prob = LinearFDEProblem(alpha=1.0, coeff=1.0, forcing=lambda t: 0.0,
                            t0=0.0, T=1.0, init=(1.0,))
    traj = solve_exponential_cq(prob, NodeSet.optimal(2), 1.0 / 16.0, rat=RAT)
    assert abs(traj.terminal - math.exp(-1.0)) < 1e-12


def test_polynomial_forcing_exact_for_low_degree():
    # alpha = 1, lam = 0, f = t^2: the nu = 3 rule integrates it exactly
    prob = LinearFDEProblem(alpha=1.0, coeff=0.0, forcing=lambda t: t * t,
                            t0=0.0, T=1.0, init=(0.5,))
    traj = solve_exponential_cq(prob, NodeSet.optimal(3), 1.0 / 8.0, rat=RAT)
    assert abs(traj.terminal - (0.5 + 1.0 / 3.0)) < 1e-13


def test_t1_convergence_second_node_pair():
    # terminal errors for p = 3, alpha = 0.5, nodes {1/3, 1} land on the
    # printed sequence 2.63e-4 ... 1.00e-7 with EOC -> 2.39
    prob = harness.t1_problem(p=3.0, alpha=0.5)
    exact = harness.exact_t1(1.0, 0.5, 3.0, 3.0)
    errs = []
    for k in (2, 4):
        h = 1.0 / 2.0**k
        traj = solve_exponential_cq(prob, NodeSet.optimal(2), h, rat=RAT)
        errs.append(abs(traj.terminal - exact))
    assert errs[0] == pytest.approx(2.63e-4, rel=0.05)
    assert errs[1] == pytest.approx(1.31e-5, rel=0.05)


def test_superposition():
    # solution map is affine in (init, forcing): solving with summed data
    # equals the sum of the separate solutions
    nodes = NodeSet.optimal(2)
    h = 1.0 / 16.0
    base = dict(alpha=0.8, coeff=2.0, t0=0.0, T=1.0)
    p1 = LinearFDEProblem(forcing=lambda t: np.sin(t), init=(1.0,), **base)
    p2 = LinearFDEProblem(forcing=lambda t: t * t, init=(-0.5,), **base)
    p12 = LinearFDEProblem(forcing=lambda t: np.sin(t) + t * t, init=(0.5,),
                           **base)
    y1 = solve_exponential_cq(p1, nodes, h, rat=RAT).values
    y2 = solve_exponential_cq(p2, nodes, h, rat=RAT).values
    y12 = solve_exponential_cq(p12, nodes, h, rat=RAT).values
    assert np.max(np.abs(y12 - (y1 + y2))) < 1e-12


def test_matrix_solver_matches_diagonalized_scalars():
    # symmetric system decouples in the eigenbasis into scalar problems
    A = np.array([[2.0, -1.0], [-1.0, 2.0]])
    evals, Q = np.linalg.eigh(A)
    alpha, h = 0.6, 1.0 / 16.0
    forcing = lambda t: np.array([t * t, np.sin(t)])
    init = np.array([1.0, -0.5])
    prob = LinearFDEProblem(alpha=alpha, coeff=A, forcing=forcing,
                            t0=0.0, T=1.0, init=(init,))
    traj = solve_exponential_cq(prob, NodeSet.optimal(2), h, rat=RAT)
    modal = []
    for i, mu in enumerate(evals):
        fi = lambda t, i=i: Q.T @ forcing(t)
        pi = LinearFDEProblem(alpha=alpha, coeff=mu,
                              forcing=lambda t, i=i: (Q.T @ forcing(t))[i],
                              t0=0.0, T=1.0, init=((Q.T @ init)[i],))
        modal.append(solve_exponential_cq(pi, NodeSet.optimal(2), h,
                                          rat=RAT).values)
    recombined = (Q @ np.vstack(modal)).T
    assert np.max(np.abs(traj.values - recombined)) < 1e-11


def test_mol_discretize_shapes_and_matrix():
    prob = mol_discretize(M=7, p=3.0, alpha=0.6)
    A = prob.coeff
    assert A.shape == (7, 7)
    dx = 1.0 / 8.0
    assert A[0, 0] == pytest.approx(2.0 / dx**2)
    assert A[0, 1] == pytest.approx(-1.0 / dx**2)
    assert prob.init[0].shape == (7,)
    # initial profile is sin(pi x) on the interior grid
    x = np.arange(1, 8) * dx
    assert np.max(np.abs(prob.init[0] - np.sin(np.pi * x))) < 1e-15


def test_mol_eigenvalues():
    # tridiag(-1, 2, -1)/dx^2 has eigenvalues 4 (M+1)^2 sin^2(i pi / (2(M+1)))
    M = 7
    prob = mol_discretize(M=M, p=3.0, alpha=0.6)
    evals = np.sort(np.linalg.eigvalsh(prob.coeff))
    ref = np.sort(4.0 * (M + 1) ** 2
                  * np.sin(np.arange(1, M + 1) * np.pi / (2 * (M + 1))) ** 2)
    assert np.max(np.abs(evals - ref)) < 1e-9 * np.max(ref)


def test_mol_semidiscrete_solution():
    # solver on the MOL system against the eigen-expansion closed form
    M, p, alpha = 8, 3.0, 0.8
    prob = mol_discretize(M=M, p=p, alpha=alpha)
    traj = solve_exponential_cq(prob, NodeSet.optimal(3), 1.0 / 64.0, rat=RAT)
    ref = harness.exact_pde_semidiscrete(1.0, alpha, p, M)
    assert np.max(np.abs(traj.terminal - ref)) < 1e-9


def test_nonfinite_state_detection():
    # forcing that returns NaN should be caught, not propagated silently
    prob = LinearFDEProblem(alpha=0.5, coeff=1.0,
                            forcing=lambda t: np.nan * t,
                            t0=0.0, T=1.0, init=(1.0,))
    with pytest.raises(NonFiniteStateError):
        solve_exponential_cq(prob, NodeSet.optimal(1), 0.25, rat=RAT)
