"""Benchmark harness: test-problem catalog, reference solutions, error/EOC
computation, experiment orchestration and report emission.  Also hosts the
command-line interface.

The catalog covers a scalar problem with power forcing t^(p-alpha)/Gamma(p+1-alpha)
(closed-form solution), a scalar problem with trigonometric forcing (fine-grid
reference) and a method-of-lines diffusion system (semidiscrete eigen oracle).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from dataclasses import dataclass, field

import numpy as np

from . import baselines, laplace, quadrature, solvers, specfun
from .errors import ExpquadError


def _ml(alpha, beta, z):
    """E_{alpha,beta}(z) for real z: double-precision series inside its trust
    region, high-precision fallback outside."""
    if abs(z) <= specfun.SERIES_ZMAX:
        return specfun.ml_series(alpha, beta, z).real
    return float(complex(specfun.ml_highprec(alpha, beta, z)).real)


# ---------------------------------------------------------------------------
# problem catalog


def t1_problem(p: float, alpha: float, lam: float = 3.0,
               y0: float = 1.0) -> solvers.LinearFDEProblem:
    """Scalar problem with forcing f(t) = (t-t0)^(p-alpha)/Gamma(p+1-alpha),
    chosen so the particular solution is the power t^p kernel term."""
    if p <= math.ceil(alpha) - 1:
        raise ValueError("need p > ceil(alpha) - 1")
    gpa = math.gamma(p + 1.0 - alpha)

    def forcing(t):
        return (t - 0.0) ** (p - alpha) / gpa

    init = (y0,) if alpha <= 1 else (y0, 0.0)
    return solvers.LinearFDEProblem(alpha=alpha, coeff=lam, t0=0.0, T=1.0,
                                    init=init, forcing=forcing)


def t2_problem(alpha: float, lam: float = 3.0,
               y0: float = 1.0) -> solvers.LinearFDEProblem:
    """Scalar problem with forcing f(t) = sin(t-t0) + 3 cos(t-t0); no closed
    form, solved against a fine-grid reference."""

    def forcing(t):
        return math.sin(t) + 3.0 * math.cos(t)

    init = (y0,) if alpha <= 1 else (y0, 0.0)
    return solvers.LinearFDEProblem(alpha=alpha, coeff=lam, t0=0.0, T=1.0,
                                    init=init, forcing=forcing)


def pde_problem(p: float, alpha: float, M: int) -> solvers.LinearFDEProblem:
    """Method-of-lines diffusion system with sin(pi x) data; see
    solvers.mol_discretize."""
    return solvers.mol_discretize(M, p, alpha)


# ---------------------------------------------------------------------------
# reference solutions


def exact_t1(t, alpha, lam, p, y0=1.0):
    """Closed form for the power-forcing problem:
    y(t) = E_{alpha,1}(-t^alpha lam) y0 + t^p E_{alpha,p+1}(-t^alpha lam).

    The particular-solution kernel is e_{alpha,p+1}, i.e. the second Mittag-
    Leffler parameter is p+1 (fixed by an independent fine-grid oracle run).
    """
    if t == 0.0:
        return float(y0)
    z = -(t**alpha) * lam
    return _ml(alpha, 1.0, z) * y0 + t**p * _ml(alpha, p + 1.0, z)


def exact_pde_semidiscrete(t, alpha, p, M):
    """Terminal oracle for the discretized diffusion system.

    The sin profile is an eigenvector of the finite-difference Laplacian with
    eigenvalue mu = (2 - 2 cos(pi dx))/dx^2, so the M-vector solution is
    sin(pi x_j) * (E_{alpha,1}(-t^alpha mu) + t^{p+alpha} E_{alpha,p+alpha+1}(...)).
    Using the discrete eigenvalue (not pi^2) removes the O(dx^2) spatial error
    from temporal convergence studies.
    """
    dx = 1.0 / (M + 1)
    x = dx * np.arange(1, M + 1)
    mu = (2.0 - 2.0 * math.cos(math.pi * dx)) / dx**2
    if t == 0.0:
        return np.sin(math.pi * x)
    z = -(t**alpha) * mu
    amp = _ml(alpha, 1.0, z) + t ** (p + alpha) * _ml(alpha, p + alpha + 1.0, z)
    return np.sin(math.pi * x) * amp


def reference_fine_grid(problem: solvers.LinearFDEProblem,
                        nodes: quadrature.NodeSet | None = None,
                        h_ref: float = 1.0 / 4096) -> solvers.Trajectory:
    """Fine-grid reference trajectory (4-node optimal rule) for problems
    without a closed form."""
    if h_ref > 1.0 / 1024:
        raise ValueError("reference stepsize must be <= 1/1024")
    if nodes is None:
        nodes = quadrature.NodeSet.optimal(4)
    return solvers.solve_exponential_cq(problem, nodes, h_ref)


# ---------------------------------------------------------------------------
# convergence reports


@dataclass(frozen=True)
class ReportRow:
    h: float
    error: float
    eoc: float | None
    cpu_seconds: float
    unstable: bool = False


@dataclass(frozen=True)
class ConvergenceReport:
    problem: str
    method: str
    reference: str
    rows: tuple = field(default_factory=tuple)

    def to_json(self) -> str:
        payload = {
            "problem": self.problem,
            "method": self.method,
            "reference": self.reference,
            "rows": [
                {"h": r.h, "error": r.error, "eoc": r.eoc,
                 "cpu_seconds": r.cpu_seconds, "unstable": r.unstable}
                for r in self.rows
            ],
        }
        return json.dumps(payload, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "ConvergenceReport":
        payload = json.loads(text)
        rows = tuple(
            ReportRow(h=r["h"], error=r["error"], eoc=r["eoc"],
                      cpu_seconds=r["cpu_seconds"], unstable=r["unstable"])
            for r in payload["rows"]
        )
        return cls(problem=payload["problem"], method=payload["method"],
                   reference=payload["reference"], rows=rows)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["h", "error", "eoc", "cpu_seconds"])
        for r in self.rows:
            eoc = "*" if r.unstable else ("" if r.eoc is None else f"{r.eoc:.16g}")
            writer.writerow([f"{r.h:.16g}", f"{r.error:.16g}", eoc,
                             f"{r.cpu_seconds:.16g}"])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, problem: str = "", method: str = "",
                 reference: str = "") -> "ConvergenceReport":
        reader = csv.reader(io.StringIO(text))
        header = next(reader)
        if header != ["h", "error", "eoc", "cpu_seconds"]:
            raise ValueError(f"unexpected CSV header {header}")
        rows = []
        for rec in reader:
            unstable = rec[2] == "*"
            eoc = None if rec[2] in ("", "*") else float(rec[2])
            rows.append(ReportRow(h=float(rec[0]), error=float(rec[1]),
                                  eoc=eoc, cpu_seconds=float(rec[3]),
                                  unstable=unstable))
        return cls(problem=problem, method=method, reference=reference,
                   rows=tuple(rows))


def _terminal_error(value, reference):
    diff = np.asarray(value, dtype=float) - np.asarray(reference, dtype=float)
    return float(np.max(np.abs(diff)))


def _run_method(problem, method, h, rat):
    if isinstance(method, quadrature.NodeSet):
        return solvers.solve_exponential_cq(problem, method, h, rat)
    if method == "pece":
        return baselines.solve_pece(problem, h)
    if method == "pi-trapezoidal":
        return baselines.solve_pi_trapezoidal(problem, h)
    raise ValueError(f"unknown method {method!r}")


def method_label(method) -> str:
    if isinstance(method, quadrature.NodeSet):
        return "exponential-cq nodes=" + ",".join(f"{c:g}" for c in method.nodes)
    return str(method)


def run_convergence(problem: solvers.LinearFDEProblem, method, h_list,
                    reference, problem_label: str = "",
                    reference_label: str = "reference", repeats: int = 1,
                    rat=None) -> ConvergenceReport:
    """Terminal-time errors against `reference` over a halving h sequence.

    `method` is a NodeSet (exponential convolution quadrature) or one of the
    baseline names "pece" / "pi-trapezoidal".  EOC for row i is
    log2(E(h_{i-1})/E(h_i)) and lives on the smaller-h row; the first row has
    none.  Wall time per row is the mean over `repeats` runs; rows where the
    stepper went non-finite carry unstable=True and no EOC.
    """
    h_list = list(h_list)
    for a, b in zip(h_list, h_list[1:]):
        if abs(a / b - 2.0) > 1e-12:
            raise ValueError("h list must halve strictly")
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    if rat is None and isinstance(method, quadrature.NodeSet):
        rat = laplace.build_rational_approx(laplace.DEFAULT_DEGREE)

    rows = []
    prev_error = None
    for h in h_list:
        elapsed = []
        for _ in range(repeats):
            t0 = time.perf_counter()
            traj = _run_method(problem, method, h, rat)
            elapsed.append(time.perf_counter() - t0)
        unstable = bool(traj.meta.get("unstable", False))
        err = _terminal_error(traj.terminal, reference)
        if not math.isfinite(err):
            unstable = True
        if unstable or prev_error is None or not math.isfinite(err) \
                or err == 0.0 or prev_error == 0.0:
            eoc = None
        else:
            eoc = math.log2(prev_error / err)
        rows.append(ReportRow(h=h, error=err, eoc=eoc,
                              cpu_seconds=sum(elapsed) / len(elapsed),
                              unstable=unstable))
        prev_error = None if unstable else err
    return ConvergenceReport(problem=problem_label,
                             method=method_label(method),
                             reference=reference_label, rows=tuple(rows))


# ---------------------------------------------------------------------------
# command-line interface

NODE_PRESETS = {f"opt{nu}": quadrature.NodeSet.optimal(nu) for nu in (1, 2, 3, 4)}


def _parse_nodes(text: str) -> quadrature.NodeSet:
    if text in NODE_PRESETS:
        return NODE_PRESETS[text]
    try:
        values = tuple(
            float(num) / float(den) if "/" in tok else float(tok)
            for tok in text.split(",")
            for num, den in [tok.split("/") if "/" in tok else (tok, "1")]
        )
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad node list {text!r}")
    return quadrature.NodeSet(values)


def _parse_h_list(text: str):
    out = []
    for tok in text.split(","):
        if "/" in tok:
            num, den = tok.split("/")
            out.append(float(num) / float(den))
        else:
            out.append(float(tok))
    return out


def _build_problem(args):
    if args.problem == "t1":
        return t1_problem(args.p, args.alpha, args.lam), f"t1(p={args.p:g},alpha={args.alpha:g})"
    if args.problem == "t2":
        return t2_problem(args.alpha, args.lam), f"t2(alpha={args.alpha:g})"
    if args.problem == "pde":
        return pde_problem(args.p, args.alpha, args.M), \
            f"pde(p={args.p:g},alpha={args.alpha:g},M={args.M})"
    raise ValueError(f"unknown problem {args.problem!r}")


def _reference_for(args, problem):
    if args.problem == "t1":
        return exact_t1(problem.T, args.alpha, args.lam, args.p), "closed form"
    if args.problem == "pde":
        return exact_pde_semidiscrete(problem.T, args.alpha, args.p, args.M), \
            "semidiscrete eigen oracle"
    traj = reference_fine_grid(problem)
    return traj.terminal, "fine grid nu=4 h=1/4096"


def _method_from(args, rat):
    if args.method in ("pece", "pi-trapezoidal"):
        return args.method
    if args.method == "expcq":
        return args.nodes
    raise ValueError(f"unknown method {args.method!r}")


def _emit(text, out):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _report_text(report, fmt):
    return report.to_json() + "\n" if fmt == "json" else report.to_csv()


def _cmd_solve(args):
    problem, _ = _build_problem(args)
    rat = laplace.build_rational_approx(args.degree_N)
    method = _method_from(args, rat)
    h = _parse_h_list(args.h_list)[0] if args.h_list else 1.0 / 64
    traj = _run_method(problem, method, h, rat)
    buf = io.StringIO()
    writer = csv.writer(buf)
    if problem.is_matrix:
        writer.writerow(["t"] + [f"y{j}" for j in range(problem.dim)])
        for t, y in zip(traj.times, traj.values):
            writer.writerow([f"{t:.16g}"] + [f"{v:.16g}" for v in y])
    else:
        writer.writerow(["t", "y"])
        for t, y in zip(traj.times, traj.values):
            writer.writerow([f"{t:.16g}", f"{y:.16g}"])
    _emit(buf.getvalue(), args.out)
    return 0


def _cmd_convergence(args):
    problem, plabel = _build_problem(args)
    rat = laplace.build_rational_approx(args.degree_N)
    method = _method_from(args, rat)
    reference, rlabel = _reference_for(args, problem)
    h_list = _parse_h_list(args.h_list)
    report = run_convergence(problem, method, h_list, reference,
                             problem_label=plabel, reference_label=rlabel,
                             repeats=args.repeats, rat=rat)
    _emit(_report_text(report, args.format), args.out)
    return 0


def _cmd_compare(args):
    problem, plabel = _build_problem(args)
    rat = laplace.build_rational_approx(args.degree_N)
    reference, rlabel = _reference_for(args, problem)
    h_list = _parse_h_list(args.h_list)
    methods = [NODE_PRESETS[f"opt{nu}"] for nu in (1, 2, 3)] + \
        ["pece", "pi-trapezoidal"]
    reports = [run_convergence(problem, m, h_list, reference,
                               problem_label=plabel, reference_label=rlabel,
                               repeats=args.repeats, rat=rat)
               for m in methods]
    if args.format == "json":
        merged = json.dumps([json.loads(r.to_json()) for r in reports], indent=2)
        _emit(merged + "\n", args.out)
    else:
        parts = []
        for r in reports:
            parts.append(f"# method: {r.method}\n" + r.to_csv())
        _emit("".join(parts), args.out)
    return 0


def _cmd_pde(args):
    args.problem = "pde"
    return _cmd_convergence(args)


def _cmd_weights_dump(args):
    rat = laplace.build_rational_approx(args.degree_N)
    nodes = args.nodes
    h = _parse_h_list(args.h_list)[0] if args.h_list else 1.0 / 64
    n = max(1, round(1.0 / h))
    table = quadrature.build_weight_table(args.alpha, args.lam, h, n, nodes, rat)
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["lag"] + [f"b{r}" for r in range(nodes.nu)])
    for j in range(1, n + 1):
        writer.writerow([j] + [f"{w:.16g}" for w in table.weights[j]])
    _emit(buf.getvalue(), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="expquad",
        description="Exponential quadrature rules for linear fractional "
                    "differential equations: solve, benchmark, compare.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--alpha", type=float, default=0.5)
        p.add_argument("--lambda", dest="lam", type=float, default=3.0)
        p.add_argument("--p", type=float, default=2.0)
        p.add_argument("--M", type=int, default=8)
        p.add_argument("--nodes", type=_parse_nodes, default=NODE_PRESETS["opt1"])
        p.add_argument("--h-list", default=None)
        p.add_argument("--degree-N", type=int, default=laplace.DEFAULT_DEGREE)
        p.add_argument("--problem", choices=["t1", "t2", "pde"], default="t1")
        p.add_argument("--method", choices=["expcq", "pece", "pi-trapezoidal"],
                       default="expcq")
        p.add_argument("--out", default=None)
        p.add_argument("--format", choices=["csv", "json"], default="csv")
        p.add_argument("--repeats", type=int, default=1)

    for name, fn in [("solve", _cmd_solve), ("convergence", _cmd_convergence),
                     ("compare", _cmd_compare), ("pde", _cmd_pde),
                     ("weights-dump", _cmd_weights_dump)]:
        p = sub.add_parser(name)
        common(p)
        p.set_defaults(func=fn)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if args.command in ("convergence", "compare", "pde") and not args.h_list:
            raise ValueError("--h-list is required for convergence runs")
        return args.func(args)
    except (ValueError, argparse.ArgumentTypeError) as exc:
        print(f"error: invalid configuration: {exc}", file=sys.stderr)
        return 2
    except ExpquadError as exc:
        print(f"error: solver failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
