"""Exponential convolution-quadrature time stepper for linear fractional
differential equations D^alpha y + lam*y = f(t), scalar or system form,
plus the method-of-lines builder for the time-fractional diffusion problem.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import laplace, quadrature, specfun
from .errors import NonFiniteStateError


@dataclass(frozen=True)
class LinearFDEProblem:
    """Initial value problem data: order alpha in (0,2), coefficient (scalar
    lam or square matrix A with positive-real spectrum), interval [t0, T],
    ceil(alpha) initial values and the forcing function."""

    alpha: float
    coeff: object
    t0: float
    T: float
    init: tuple
    forcing: object

    def __post_init__(self):
        if not 0 < self.alpha < 2:
            raise ValueError("alpha must lie in (0, 2)")
        if self.t0 >= self.T:
            raise ValueError("need t0 < T")
        m = math.ceil(self.alpha)
        init = tuple(self.init)
        if len(init) != m:
            raise ValueError(f"need {m} initial values for alpha={self.alpha}")
        if self.is_matrix:
            A = np.asarray(self.coeff)
            if A.ndim != 2 or A.shape[0] != A.shape[1]:
                raise ValueError("matrix coefficient must be square")
            init = tuple(np.asarray(v, dtype=float) for v in init)
        object.__setattr__(self, "init", init)

    @property
    def is_matrix(self) -> bool:
        return isinstance(self.coeff, np.ndarray) and np.ndim(self.coeff) == 2

    @property
    def m(self) -> int:
        return math.ceil(self.alpha)

    @property
    def dim(self) -> int:
        return self.coeff.shape[0] if self.is_matrix else 1


@dataclass(frozen=True)
class Trajectory:
    h: float
    times: np.ndarray = field(repr=False)
    values: np.ndarray = field(repr=False)
    meta: dict = field(default_factory=dict)

    @property
    def terminal(self):
        return self.values[-1]


def step_count(problem: LinearFDEProblem, h: float) -> int:
    """Number of steps; T - t0 must be an integer multiple of h."""
    ratio = (problem.T - problem.t0) / h
    n = round(ratio)
    if n < 1 or abs(ratio - n) > 1e-12 * max(1.0, ratio):
        raise ValueError(f"(T - t0)/h = {ratio} is not a positive integer")
    return n


def _forcing_samples(problem, nodes, h, n):
    """f at the quadrature points, cached by exact time value so shared grid
    points (c=0/c=1 overlaps) are evaluated once."""
    cache = {}

    def fval(t):
        if t not in cache:
            cache[t] = problem.forcing(t)
        return cache[t]

    nu = nodes.nu
    if problem.is_matrix:
        F = np.empty((n, nu, problem.dim))
    else:
        F = np.empty((n, nu))
    for j in range(n):
        for r, c in enumerate(nodes.nodes):
            F[j, r] = fval(problem.t0 + (j + c) * h)
    return F


def _homogeneous_terms(problem, h, n, rat):
    """sum_k e(alpha, k+1, t_n - t0; coeff) * y0k for n = 0..n_max."""
    alpha = problem.alpha
    if problem.is_matrix:
        w = h**alpha * problem.coeff
        hom = np.empty((n + 1, problem.dim))
        hom[0] = problem.init[0]
        betas = [k + 1.0 for k in range(problem.m)]
        for nn in range(1, n + 1):
            fam = laplace._gml_pf_matrix_family(alpha, betas, float(nn), w, rat)
            acc = np.zeros(problem.dim)
            for k in range(problem.m):
                acc += h**k * (fam[k] @ problem.init[k])
            hom[nn] = acc
        return hom
    hom = np.empty(n + 1)
    hom[0] = problem.init[0]
    for nn in range(1, n + 1):
        acc = 0.0
        for k in range(problem.m):
            # e(alpha, k+1, 0; .) = 1 for k=0 and 0 for k>=1 is the n=0 case
            acc += specfun.gml(alpha, k + 1.0, nn * h, problem.coeff, rat) * problem.init[k]
        hom[nn] = acc
    return hom


def solve_exponential_cq(problem: LinearFDEProblem, nodes: quadrature.NodeSet,
                         h: float, rat=None) -> Trajectory:
    """Advance the convolution quadrature over the whole interval.

    y_n = homogeneous ML terms + sum over past intervals of the per-lag
    quadrature applied to the forcing.  The weight table is precomputed for
    all lags; the time loop itself is a plain O(n^2) convolution.
    """
    if rat is None:
        rat = laplace.build_rational_approx(laplace.DEFAULT_DEGREE)
    t_start = time.perf_counter()
    n = step_count(problem, h)
    table = quadrature.build_weight_table(
        problem.alpha, problem.coeff, h, n, nodes, rat
    )
    hom = _homogeneous_terms(problem, h, n, rat)
    F = _forcing_samples(problem, nodes, h, n)
    times = problem.t0 + h * np.arange(n + 1)

    if problem.is_matrix:
        values = np.empty((n + 1, problem.dim))
        values[0] = hom[0]
        for nn in range(1, n + 1):
            # lags 1..nn paired with forcing intervals nn-1..0
            conv = np.einsum("lrab,lrb->a", table.weights[1 : nn + 1],
                             F[nn - 1 :: -1])
            values[nn] = hom[nn] + conv
            if not np.all(np.isfinite(values[nn])):
                raise NonFiniteStateError(nn)
    else:
        values = np.empty(n + 1)
        values[0] = hom[0]
        for nn in range(1, n + 1):
            conv = float(np.sum(table.weights[1 : nn + 1] * F[nn - 1 :: -1]))
            values[nn] = hom[nn] + conv
            if not np.isfinite(values[nn]):
                raise NonFiniteStateError(nn)

    meta = {
        "method": "exponential-cq",
        "nodes": nodes.nodes,
        "nu": nodes.nu,
        "rational_degree": rat.degree,
        "wall_time": time.perf_counter() - t_start,
    }
    return Trajectory(h=h, times=times, values=values, meta=meta)


def mol_discretize(M: int, p: float, alpha: float) -> LinearFDEProblem:
    """Method-of-lines system for the time-fractional diffusion test problem.

    Second spatial derivative by centered differences on M interior points of
    [0, 1]: A = tridiag(-1, 2, -1) / dx^2, initial profile and forcing both
    proportional to sin(pi x).
    """
    if M < 2:
        raise ValueError("need at least two interior points")
    dx = 1.0 / (M + 1)
    x = dx * np.arange(1, M + 1)
    A = (np.diag(2.0 * np.ones(M)) - np.diag(np.ones(M - 1), 1)
         - np.diag(np.ones(M - 1), -1)) / dx**2
    sinvec = np.sin(np.pi * x)
    gp1 = math.gamma(p + 1.0)

    def forcing(t):
        return (t**p / gp1) * sinvec

    init = [sinvec.copy()]
    if alpha > 1:
        init.append(np.zeros(M))
    return LinearFDEProblem(alpha=alpha, coeff=A, t0=0.0, T=1.0,
                            init=tuple(init), forcing=forcing)
