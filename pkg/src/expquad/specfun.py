"""Scalar special functions: Euler gamma, the two-parameter Mittag-Leffler
series, and the kernel e(alpha, beta, t, lam) = t^(beta-1) * E_{alpha,beta}(-t^alpha * lam).

The truncated power series is the reference path at desk scale; outside its
trust region evaluation is routed to the partial-fraction path in
:mod:`expquad.laplace`.
"""

from __future__ import annotations

import cmath
import math

import mpmath

from .errors import SeriesConvergenceError

# |z| beyond which the double-precision series is not trusted (cancellation
# for large negative arguments is the failure mode).
SERIES_ZMAX = 5.0

MAX_TERMS = 10_000


def gamma(x: float) -> float:
    """Euler gamma function; raises on the poles at 0, -1, -2, ..."""
    if x <= 0 and x == int(x):
        raise ValueError(f"gamma pole at x={x}")
    return math.gamma(x)


def ml_series(alpha: float, beta: float, z: complex, tol: float = 1e-15) -> complex:
    """Two-parameter Mittag-Leffler function by direct summation.

    Sums z^k / Gamma(alpha*k + beta) in ascending k with compensated
    accumulation, stopping once the current term and a geometric tail
    estimate fall below tol * |sum|.  Only valid for |z| <= SERIES_ZMAX.
    """
    if alpha <= 0 or beta <= 0:
        raise ValueError("alpha and beta must be positive")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if abs(z) > SERIES_ZMAX:
        raise ValueError(
            f"|z|={abs(z):.3g} exceeds the series trust region {SERIES_ZMAX}"
        )
    if z == 0:
        return complex(1.0 / math.gamma(beta))

    logz = cmath.log(z)
    total = complex(0.0)
    comp = complex(0.0)  # Kahan compensation
    prev_mag = math.inf
    for k in range(MAX_TERMS):
        term = cmath.exp(k * logz - math.lgamma(alpha * k + beta))
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
        mag = abs(term)
        if k >= 1 and mag <= tol * abs(total) and mag < prev_mag:
            ratio = mag / prev_mag
            tail = mag * ratio / (1.0 - ratio)
            if tail <= tol * abs(total):
                return total
        prev_mag = mag
    raise SeriesConvergenceError(
        f"ML series did not converge for alpha={alpha}, beta={beta}, z={z}"
    )


def ml_highprec(alpha: float, beta: float, z: complex, dps: int = 50) -> complex:
    """Arbitrary-precision summation of the defining ML series (test oracle).

    Working precision is raised enough to absorb the cancellation of the
    alternating series for negative arguments, so any desk-scale z is fine.
    """
    if z == 0:
        return complex(1.0 / math.gamma(beta))
    # worst-case term magnitude ~ exp(alpha * |z|^(1/alpha)) sets the
    # cancellation budget
    guard = int(0.45 * abs(z) ** (1.0 / alpha)) + 20
    with mpmath.workdps(dps + guard):
        zz = mpmath.mpmathify(z)
        aa = mpmath.mpf(alpha)
        bb = mpmath.mpf(beta)
        total = mpmath.mpf(0)
        term_mag = mpmath.inf
        eps = mpmath.mpf(10) ** (-(dps + 5))
        k = 0
        while True:
            term = zz**k / mpmath.gamma(aa * k + bb)
            total += term
            new_mag = abs(term)
            if k > 2 and new_mag < eps * max(1, abs(total)) and new_mag < term_mag:
                break
            term_mag = new_mag
            k += 1
            if k > 100 * MAX_TERMS:
                raise SeriesConvergenceError("high-precision ML series stalled")
        return complex(total)


def gml(alpha: float, beta: float, t: float, lam, rat=None):
    """Generalized ML kernel t^(beta-1) * E_{alpha,beta}(-t^alpha * lam).

    Routes to the series for small |t^alpha * lam| and to the
    partial-fraction path otherwise.  t = 0 is only defined for beta >= 1.
    """
    if alpha <= 0 or beta <= 0:
        raise ValueError("alpha and beta must be positive")
    if t < 0:
        raise ValueError("t must be nonnegative")
    if t == 0:
        if beta < 1:
            raise ValueError("kernel diverges at t=0 for beta < 1")
        return 1.0 if beta == 1 else 0.0

    z = t**alpha * lam
    if abs(z) <= SERIES_ZMAX:
        val = t ** (beta - 1.0) * ml_series(alpha, beta, -z)
    else:
        from . import laplace  # deferred: laplace imports this module

        if rat is None:
            rat = laplace.build_rational_approx(laplace.DEFAULT_DEGREE)
        # scale the time variable to 1 so the lag argument stays in range
        val = t ** (beta - 1.0) * laplace.gml_pf(alpha, beta, 1.0, z, rat)
    if isinstance(lam, complex):
        return complex(val)
    return float(val.real) if isinstance(val, complex) else float(val)
