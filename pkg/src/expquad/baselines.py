"""Classical product-integration baselines: the fractional PECE
(Adams-Bashforth-Moulton) scheme and the implicit PI trapezoidal rule.

Both advance D^alpha y + lam*y = f(t) by treating g(t, y) = f(t) - lam*y as
the right-hand side of D^alpha y = g.  The PECE scheme is explicit and may
blow up on stiff systems; overflow is recorded, not raised.
"""

from __future__ import annotations

import math
import time

import numpy as np

from .errors import SingularDenominatorError
from .solvers import LinearFDEProblem, Trajectory, step_count


def _memory_terms(problem, times):
    """Taylor polynomial of the initial data, sum_k (t - t0)^k / k! * y0k."""
    tbar = times - problem.t0
    if problem.is_matrix:
        out = np.zeros((len(times), problem.dim))
    else:
        out = np.zeros(len(times))
    fact = 1.0
    for k, y0k in enumerate(problem.init):
        if k > 0:
            fact *= k
        if problem.is_matrix:
            out += (tbar**k / fact)[:, None] * np.asarray(y0k)[None, :]
        else:
            out += tbar**k / fact * y0k
    return out


def _pi_coefficients(alpha, n):
    """Product-trapezoidal convolution coefficients (before / Gamma(alpha+2)).

    a_lag[l] is the weight attached to g at lag l = n - j for 0 < j < n;
    a0[n] is the special weight of the oldest sample g_0.  The rectangle
    (predictor) coefficients b_lag[l] multiply g at lag l+1 and carry the
    1/Gamma(alpha+1) normalization instead.
    """
    ell = np.arange(n + 1, dtype=float)
    a_lag = np.zeros(n + 1)
    a_lag[1:] = ((ell[1:] + 1.0) ** (alpha + 1.0)
                 + (ell[1:] - 1.0) ** (alpha + 1.0)
                 - 2.0 * ell[1:] ** (alpha + 1.0))
    nn = np.arange(n + 1, dtype=float)
    a0 = np.zeros(n + 1)
    a0[1:] = (nn[1:] - 1.0) ** (alpha + 1.0) - (nn[1:] - 1.0 - alpha) * nn[1:] ** alpha
    b_lag = (ell + 1.0) ** alpha - ell**alpha
    return a_lag, a0, b_lag


def solve_pece(problem: LinearFDEProblem, h: float) -> Trajectory:
    """One-pass predict-evaluate-correct-evaluate fractional Adams scheme.

    Rectangle-rule predictor, trapezoidal corrector.  No stability
    safeguard: on stiff problems the iterates may overflow, in which case
    the trajectory is returned as-is with meta["unstable"] set.
    """
    t_start = time.perf_counter()
    n = step_count(problem, h)
    alpha = problem.alpha
    times = problem.t0 + h * np.arange(n + 1)
    mem = _memory_terms(problem, times)
    a_lag, a0, b_lag = _pi_coefficients(alpha, n)
    ca = h**alpha / math.gamma(alpha + 2.0)
    cb = h**alpha / math.gamma(alpha + 1.0)

    lam = problem.coeff
    if problem.is_matrix:
        values = np.empty((n + 1, problem.dim))
        G = np.empty((n, problem.dim))
    else:
        values = np.empty(n + 1)
        G = np.empty(n)
    values[0] = mem[0]
    unstable = False
    with np.errstate(over="ignore", invalid="ignore"):
        for k in range(1, n + 1):
            g_prev = problem.forcing(times[k - 1]) - (
                lam @ values[k - 1] if problem.is_matrix else lam * values[k - 1])
            G[k - 1] = g_prev
            hist = G[k - 1 :: -1]  # lags 1..k
            if problem.is_matrix:
                pred = mem[k] + cb * (b_lag[:k] @ hist)
                inner = a_lag[1:k] @ hist[: k - 1] if k > 1 else 0.0
            else:
                pred = mem[k] + cb * float(b_lag[:k] @ hist)
                inner = float(a_lag[1:k] @ hist[: k - 1]) if k > 1 else 0.0
            g_new = problem.forcing(times[k]) - (
                lam @ pred if problem.is_matrix else lam * pred)
            values[k] = mem[k] + ca * (g_new + inner + a0[k] * G[0])
            if not np.all(np.isfinite(values[k])):
                unstable = True
                values[k:] = values[k]
                break

    meta = {
        "method": "pece",
        "unstable": unstable,
        "wall_time": time.perf_counter() - t_start,
    }
    return Trajectory(h=h, times=times, values=values, meta=meta)


def solve_pi_trapezoidal(problem: LinearFDEProblem, h: float) -> Trajectory:
    """Implicit product-trapezoidal rule; order 1 + alpha on smooth data.

    Linear problems only: the implicit stage (I + c*lam) y_n = known is a
    scalar division, or a matrix solve with the inverse formed once.
    """
    t_start = time.perf_counter()
    n = step_count(problem, h)
    alpha = problem.alpha
    times = problem.t0 + h * np.arange(n + 1)
    mem = _memory_terms(problem, times)
    a_lag, a0, _ = _pi_coefficients(alpha, n)
    ca = h**alpha / math.gamma(alpha + 2.0)

    lam = problem.coeff
    if problem.is_matrix:
        M = np.eye(problem.dim) + ca * lam
        if np.linalg.cond(M) > 1e15:
            raise SingularDenominatorError("implicit-step matrix is singular")
        Minv = np.linalg.inv(M)
        values = np.empty((n + 1, problem.dim))
        G = np.empty((n + 1, problem.dim))
    else:
        denom = 1.0 + ca * lam
        if denom == 0.0:
            raise SingularDenominatorError("implicit-step denominator is zero")
        values = np.empty(n + 1)
        G = np.empty(n + 1)
    values[0] = mem[0]
    G[0] = problem.forcing(times[0]) - (
        lam @ values[0] if problem.is_matrix else lam * values[0])
    for k in range(1, n + 1):
        hist = G[k - 1 :: -1]  # lags 1..k
        if problem.is_matrix:
            inner = a_lag[1:k] @ hist[: k - 1] if k > 1 else 0.0
            rhs = mem[k] + ca * (problem.forcing(times[k]) + inner + a0[k] * G[0])
            values[k] = Minv @ rhs
            G[k] = problem.forcing(times[k]) - lam @ values[k]
        else:
            inner = float(a_lag[1:k] @ hist[: k - 1]) if k > 1 else 0.0
            rhs = mem[k] + ca * (problem.forcing(times[k]) + inner + a0[k] * G[0])
            values[k] = rhs / denom
            G[k] = problem.forcing(times[k]) - lam * values[k]

    meta = {
        "method": "pi-trapezoidal",
        "unstable": False,
        "wall_time": time.perf_counter() - t_start,
    }
    return Trajectory(h=h, times=times, values=values, meta=meta)
