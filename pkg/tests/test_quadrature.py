"""Node sets, Vandermonde moment solves and weight tables."""

import math

import numpy as np
import pytest

from expquad.errors import WeightAccuracyError
from expquad.laplace import build_rational_approx
from expquad.quadrature import (
    OPTIMAL_NODES,
    NodeSet,
    build_weight_table,
    degree_of_precision,
    node_poly_integral,
    vandermonde_solve,
)

RAT = build_rational_approx(15)


def test_node_set_validation():
    with pytest.raises(ValueError):
        NodeSet(())
    with pytest.raises(ValueError):
        NodeSet((0.0, 1.2))
    with pytest.raises(ValueError):
        NodeSet((0.5, 0.5))
    with pytest.raises(ValueError):
        NodeSet(tuple(i / 8.0 for i in range(9)))
    assert NodeSet((0.5,)).nu == 1


def test_optimal_presets():
    assert NodeSet.optimal(1).nodes == (0.5,)
    assert NodeSet.optimal(2).nodes == (1.0 / 3.0, 1.0)
    assert NodeSet.optimal(3).nodes == (0.0, 0.5, 1.0)
    assert NodeSet.optimal(4).nodes == (0.0, 0.25, 0.7, 1.0)
    with pytest.raises(ValueError):
        NodeSet.optimal(5)


def test_node_poly_integral_vanishes_on_optimal_sets():
    # the defining property of the optimal presets for nu <= 3; 1/3 is not
    # exactly representable, so allow one ulp of slack there
    assert node_poly_integral(NodeSet.optimal(1)) == 0.0
    assert node_poly_integral(NodeSet.optimal(3)) == 0.0
    assert abs(node_poly_integral(NodeSet.optimal(2))) < 1e-16


def test_node_poly_integral_known_values():
    # int_0^1 (u - 0) du = 1/2; int_0^1 u(u - 1) du = -1/6
    assert node_poly_integral(NodeSet((0.0,))) == 0.5
    assert node_poly_integral(NodeSet((0.0, 1.0))) == pytest.approx(-1.0 / 6.0)


def test_vandermonde_solve_reproduces_moments():
    rng = np.random.default_rng(5)
    for nodes in [NodeSet.optimal(2), NodeSet.optimal(4),
                  NodeSet((0.1, 0.35, 0.62, 0.8, 0.97))]:
        c = np.asarray(nodes.nodes)
        rhs = rng.standard_normal(nodes.nu)
        x = vandermonde_solve(nodes, rhs)
        V = c[None, :] ** np.arange(nodes.nu)[:, None]
        assert np.max(np.abs(V @ x - rhs)) < 1e-12


def test_vandermonde_solve_trailing_axes():
    nodes = NodeSet.optimal(3)
    rng = np.random.default_rng(9)
    rhs = rng.standard_normal((3, 2, 2))
    x = vandermonde_solve(nodes, rhs)
    for a in range(2):
        for b in range(2):
            ref = vandermonde_solve(nodes, rhs[:, a, b])
            assert np.max(np.abs(x[:, a, b] - ref)) < 1e-14


def test_single_interval_classical_moments():
    # alpha = 1, lambda = 0, j = 1: rhs_k = h * 1/(k+1) rescaled; with h = b-a
    # the rule integrates u^k over one step, R = (b-a)^(k+1)/(k+1)!
    # checked through order conditions: sum_r b_r c_r^k = h/(k+1)
    h = 0.4
    for nu in (1, 2, 3, 4):
        nodes = NodeSet.optimal(nu)
        table = build_weight_table(1.0, 0.0, h, 1, nodes, rat=RAT)
        c = np.asarray(nodes.nodes)
        for k in range(nu):
            got = np.sum(table.weights[1] * c**k)
            assert abs(got - h / (k + 1)) < 1e-12


def test_taylor_remainder_closed_form():
    # unit-lag moment for alpha=1, lambda=0 is 1/(k+1); restoring the
    # h^(alpha+k)/k! scaling gives the Taylor remainder (b-a)^(k+1)/(k+1)!
    from expquad.laplace import KernelRequest, r_hat
    for k in range(7):
        got = r_hat(KernelRequest(1, k, 1.0, 0.0), RAT)
        assert abs(got - 1.0 / (k + 1)) < 1e-13
        h = 0.3
        remainder = h ** (1 + k) / math.factorial(k) * got
        assert abs(remainder - h ** (k + 1) / math.factorial(k + 1)) < 1e-14


@pytest.mark.parametrize("alpha", [0.5, 0.8, 1.5])
def test_order_condition_residuals_small(alpha):
    lam = 3.0
    h = 1.0 / 8.0
    for nu in (1, 2, 3, 4):
        table = build_weight_table(alpha, lam, h, 64, NodeSet.optimal(nu),
                                   rat=RAT)
        worst = max(table.order_condition_residuals(j).max()
                    for j in range(1, 65))
        assert worst <= 1e-10


def test_weight_table_matrix_case():
    A = np.array([[2.0, -1.0], [-1.0, 2.0]])
    table = build_weight_table(0.6, A, 0.25, 8, NodeSet.optimal(2), rat=RAT)
    assert table.is_matrix
    assert table.n == 8
    worst = max(table.order_condition_residuals(j).max() for j in range(1, 9))
    assert worst <= 1e-10


def test_weight_table_matrix_matches_eigen_decomposition():
    # weights for a symmetric matrix coefficient = eigenvector-rotated
    # scalar weights for the eigenvalues
    A = np.array([[2.0, -1.0], [-1.0, 2.0]])
    evals, Q = np.linalg.eigh(A)
    nodes = NodeSet.optimal(2)
    table = build_weight_table(0.6, A, 0.25, 6, nodes, rat=RAT)
    scalar = [build_weight_table(0.6, ev, 0.25, 6, nodes, rat=RAT)
              for ev in evals]
    for j in range(1, 7):
        for r in range(nodes.nu):
            diag = np.diag([scalar[i].weights[j][r] for i in range(2)])
            assert np.max(np.abs(table.weights[j][r] - Q @ diag @ Q.T)) < 1e-11


def test_degree_of_precision_fractional_kernel():
    # nu conditions are imposed, so every set meets degree nu - 1 and a
    # generic set stops there
    h = 1.0 / 8.0
    for nu, generic in [(1, (0.0,)), (2, (0.0, 1.0)), (3, (0.0, 0.8, 1.0))]:
        t_gen = build_weight_table(0.5, 3.0, h, 4, NodeSet(generic), rat=RAT)
        d_gen = degree_of_precision(NodeSet(generic), t_gen.weights[2], 2, 0.5,
                                    h**0.5 * 3.0, h, rat=RAT)
        assert d_gen == nu - 1


def test_degree_of_precision_gain_for_lebesgue_kernel():
    # with alpha = 1, lambda = 0 the step kernel is Lebesgue measure and the
    # optimal sets (vanishing node-polynomial integral) gain one degree
    h = 1.0 / 8.0
    for nu in (1, 2, 3):
        opt = NodeSet.optimal(nu)
        t_opt = build_weight_table(1.0, 0.0, h, 2, opt, rat=RAT)
        d_opt = degree_of_precision(opt, t_opt.weights[1], 1, 1.0, 0.0, h,
                                    rat=RAT)
        assert d_opt == nu
