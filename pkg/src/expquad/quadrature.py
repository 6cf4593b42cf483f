"""Quadrature node sets, order-condition weight tables, and degree-of-precision
checks for the exponential convolution quadrature.

Weights solve the moment system C b(j) = rhs(j), with C the Vandermonde
matrix of the nodes and the right-hand side assembled from the kernel moments
of :mod:`expquad.laplace`.  The step-size factor h^alpha is applied once
during assembly, keeping the kernels dimensionless.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import laplace
from .errors import WeightAccuracyError

# residual bound for the order conditions, relative to max(1, |rhs|)
ORDER_CONDITION_TOL = 1e-10

# named presets: nodes with vanishing node-polynomial integral
OPTIMAL_NODES = {
    1: (0.5,),
    2: (1.0 / 3.0, 1.0),
    3: (0.0, 0.5, 1.0),
    4: (0.0, 0.25, 0.7, 1.0),
}


@dataclass(frozen=True)
class NodeSet:
    nodes: tuple

    def __post_init__(self):
        nodes = tuple(float(c) for c in self.nodes)
        object.__setattr__(self, "nodes", nodes)
        if not 1 <= len(nodes) <= 8:
            raise ValueError("need between 1 and 8 nodes")
        if any(c < 0.0 or c > 1.0 for c in nodes):
            raise ValueError("nodes must lie in [0, 1]")
        for i, a in enumerate(nodes):
            for b in nodes[i + 1 :]:
                if abs(a - b) <= 1e-10:
                    raise ValueError(f"nodes {a} and {b} too close")

    @property
    def nu(self) -> int:
        return len(self.nodes)

    @classmethod
    def optimal(cls, nu: int) -> "NodeSet":
        if nu not in OPTIMAL_NODES:
            raise ValueError(f"no optimal preset for nu={nu}")
        return cls(OPTIMAL_NODES[nu])


def node_poly_integral(nodes: NodeSet) -> float:
    """Integral over [0,1] of the node polynomial prod(u - c_r).

    Expanded into monomials with exact rational arithmetic on the node
    values, so symmetric node sets give exactly zero.
    """
    coeffs = [Fraction(1)]  # ascending powers of u
    for c in nodes.nodes:
        fc = Fraction(c)
        shifted = [Fraction(0)] + coeffs
        coeffs = [s - fc * a for s, a in zip(shifted, coeffs + [Fraction(0)])]
    total = sum(a / (i + 1) for i, a in enumerate(coeffs))
    return float(total)


def vandermonde_solve(nodes: NodeSet, rhs):
    """Solve sum_r x_r c_r^k = rhs_k by Bjorck-Pereyra progressive elimination.

    rhs may carry trailing axes (matrix-valued moments); the recurrences act
    along axis 0 only.  O(nu^2) scalar combinations, no matrix is formed.
    """
    c = nodes.nodes
    n = len(c)
    x = np.array(rhs, dtype=None, copy=True)
    if x.shape[0] != n:
        raise ValueError("rhs length must match the node count")
    for k in range(n - 1):
        for i in range(n - 1, k, -1):
            x[i] = x[i] - c[k] * x[i - 1]
    for k in range(n - 2, -1, -1):
        for i in range(k + 1, n):
            x[i] = x[i] / (c[i] - c[i - k - 1])
        for i in range(k, n - 1):
            x[i] = x[i] - x[i + 1]
    return x


@dataclass(frozen=True)
class WeightTable:
    """Per-lag quadrature weights b_r(j) (or matrices B_r(j)), j = 1..n.

    ``weights[j]`` has shape (nu,) in the scalar case and (nu, M, M) in the
    matrix case; index 0 is unused.  ``rhs`` stores the assembled moment
    vectors for residual checks.
    """

    h: float
    alpha: float
    coeff: object
    nodes: NodeSet
    weights: np.ndarray = field(repr=False)
    rhs: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        return self.weights.shape[0] - 1

    @property
    def is_matrix(self) -> bool:
        return self.weights.ndim == 4

    def order_condition_residuals(self, j: int) -> np.ndarray:
        """|sum_r b_r(j) c_r^k - rhs_k(j)| / max(1, |rhs_k(j)|) for each k."""
        c = np.asarray(self.nodes.nodes)
        pow_mat = c[None, :] ** np.arange(self.nodes.nu)[:, None]
        if self.is_matrix:
            lhs = np.einsum("kr,rab->kab", pow_mat, self.weights[j])
            num = np.abs(lhs - self.rhs[j]).max(axis=(1, 2))
            den = np.maximum(1.0, np.abs(self.rhs[j]).max(axis=(1, 2)))
        else:
            lhs = pow_mat @ self.weights[j]
            num = np.abs(lhs - self.rhs[j])
            den = np.maximum(1.0, np.abs(self.rhs[j]))
        return num / den


def build_weight_table(alpha, coeff, h, n, nodes: NodeSet, rat=None) -> WeightTable:
    """Quadrature weights for all lags j = 1..n from the order conditions."""
    if n < 1:
        raise ValueError("need at least one lag")
    if rat is None:
        rat = laplace.build_rational_approx(laplace.DEFAULT_DEGREE)
    nu = nodes.nu
    ha = h**alpha
    lags = np.arange(1, n + 1)
    is_matrix = isinstance(coeff, np.ndarray) and np.ndim(coeff) == 2
    if is_matrix:
        w = ha * coeff
        m = w.shape[0]
        rhs = np.empty((n + 1, nu, m, m))
        rhs[0] = 0.0
        for j in lags:
            for k in range(nu):
                req = laplace.KernelRequest(j=int(j), k=k, alpha=alpha, w=w)
                rhs[j, k] = ha * laplace.r_hat_matrix(req, rat)
    else:
        w = ha * coeff
        if not isinstance(w, complex) and w < 0:
            raise ValueError("scalar coefficient must give h^alpha * lam >= 0")
        rhs = np.empty((n + 1, nu))
        rhs[0] = 0.0
        for k in range(nu):
            rhs[1:, k] = ha * laplace.r_hat_lags(alpha, k, lags, w, rat)
    weights = np.empty_like(rhs)
    weights[0] = 0.0
    # one progressive elimination, vectorized over all lags at once
    weights[1:] = np.moveaxis(
        vandermonde_solve(nodes, np.moveaxis(rhs[1:], 0, 1)), 1, 0
    )
    table = WeightTable(h=h, alpha=alpha, coeff=coeff, nodes=nodes,
                        weights=weights, rhs=rhs)
    worst = max(float(table.order_condition_residuals(j).max()) for j in lags)
    if worst > ORDER_CONDITION_TOL:
        raise WeightAccuracyError(
            f"order-condition residual {worst:.3e} exceeds {ORDER_CONDITION_TOL}"
        )
    return table


def degree_of_precision(nodes: NodeSet, weights_j, j, alpha, w, h,
                        rat=None, tol=1e-9, max_k=None) -> int:
    """Largest d with all moment residuals k = 0..d below tol (relative)."""
    if rat is None:
        rat = laplace.build_rational_approx(laplace.DEFAULT_DEGREE)
    if max_k is None:
        max_k = 2 * nodes.nu + 2
    c = np.asarray(nodes.nodes)
    b = np.asarray(weights_j)
    ha = h**alpha
    d = -1
    for k in range(max_k + 1):
        req = laplace.KernelRequest(j=int(j), k=k, alpha=alpha, w=w)
        rhs = ha * laplace.r_hat(req, rat)
        resid = abs(float(b @ c**k) - rhs) / max(1.0, abs(rhs))
        if resid > tol:
            break
        d = k
    return d
