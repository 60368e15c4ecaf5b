"""Command-line entry point: ``ptvdp <subcommand> [options]``.

Exit status is 0 on success, 2 for invalid configuration and 3 when an
integration or eigensolve fails. Output goes to ``--out`` (written only on
success) or to stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import compare, io, quantum, rg
from .errors import (BadBracket, ManifoldViolation, NoConvergence, NonFinite,
                     ResonantDenominator, StepUnderflow, TooShort)
from .integrate import IntegratorConfig, integrate
from .model import InitialData, ModelParams
from .perturbation import perturbative_solution
from .solutions import ClosedFormSolution, TabulatedSolution

EXIT_CONFIG = 2
EXIT_FAILURE = 3


class ConfigError(Exception):
    pass


def _model_args(p, mu1=0.01, mu2=0.02):
    p.add_argument("--omega", type=float, default=1.0)
    p.add_argument("--mu1", type=float, default=mu1)
    p.add_argument("--mu2", type=float, default=mu2)


def _init_args(p, b0=1.0):
    p.add_argument("--t0", type=float, default=0.0)
    p.add_argument("--a0", type=float, default=1.0)
    p.add_argument("--b0", type=float, default=b0)
    p.add_argument("--t-end", type=float, default=100.0)


def _output_args(p):
    p.add_argument("--out", type=Path, default=None)
    p.add_argument("--format", choices=("csv", "json"), default="csv")


def _grid_args(p):
    p.add_argument("--n-samples", type=int, default=None,
                   help="number of uniform output samples")
    p.add_argument("--dt", type=float, default=None, help="uniform output spacing")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ptvdp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="integrate the equations of motion")
    _model_args(p)
    _init_args(p)
    p.add_argument("--rtol", type=float, default=1e-10)
    p.add_argument("--atol", type=float, default=1e-10)
    p.add_argument("--max-step", type=float, default=np.inf)
    p.add_argument("--initial-step", type=float, default=1e-3)
    p.add_argument("--method", choices=("dopri5", "rk4"), default="dopri5")
    _grid_args(p)
    _output_args(p)

    p = sub.add_parser("rg", help="sample an RG-resummed closed form")
    _model_args(p)
    _init_args(p, b0=None)
    p.add_argument("--branch", choices=("center", "limit"), default="limit")
    p.add_argument("--sign", choices=("+", "-"), default="+")
    _grid_args(p)
    _output_args(p)

    p = sub.add_parser("perturb", help="sample the first-order perturbative solution")
    _model_args(p)
    _init_args(p)
    _grid_args(p)
    _output_args(p)

    p = sub.add_parser("compare", help="error norms and orbit classes of two trajectory files")
    p.add_argument("file_a", type=Path)
    p.add_argument("file_b", type=Path)
    p.add_argument("--window", type=float, nargs=2, default=None, metavar=("T0", "T1"))
    p.add_argument("--n-samples", type=int, default=2001)
    p.add_argument("--center-tol", type=float, default=compare.CENTER_TOL)
    p.add_argument("--omega", type=float, default=1.0)
    p.add_argument("--out", type=Path, default=None)

    p = sub.add_parser("spectrum", help="eigenvalues of the truncated quantum Hamiltonian")
    _model_args(p, mu1=0.0, mu2=0.0)
    p.add_argument("--n-max", type=int, default=12)
    _output_args(p)

    p = sub.add_parser("sweep", help="fraction of complex eigenvalues along a coupling grid")
    p.add_argument("--mode", choices=("mu", "ratio"), default="mu")
    p.add_argument("--omega", type=float, default=1.0)
    p.add_argument("--mu1", type=float, default=0.01, help="fixed mu1 for --mode ratio")
    p.add_argument("--values", type=float, nargs="+", default=None)
    p.add_argument("--start", type=float, default=0.0)
    p.add_argument("--stop", type=float, default=2.0)
    p.add_argument("--num", type=int, default=21)
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--im-tol", type=float, default=quantum.IM_TOL)
    p.add_argument("--interior", type=float, default=quantum.INTERIOR_FRACTION)
    p.add_argument("--workers", type=int, default=None)
    _output_args(p)

    p = sub.add_parser("toy", help="exact, perturbative and RG solutions of dy/dt = -eps y")
    p.add_argument("--t0", type=float, default=0.0)
    p.add_argument("--a", type=float, default=1.0)
    p.add_argument("--eps", type=float, default=0.1)
    p.add_argument("--t-end", type=float, default=50.0)
    p.add_argument("--n-samples", type=int, default=51)
    _output_args(p)
    return parser


def _params(args) -> ModelParams:
    return ModelParams(args.omega, args.mu1, args.mu2)


def _grid(args, t0, t1):
    if args.dt is not None and args.n_samples is not None:
        raise ConfigError("give at most one of --dt and --n-samples")
    if args.dt is not None:
        if args.dt <= 0:
            raise ConfigError("--dt must be positive")
        n = int(np.floor((t1 - t0) / args.dt + 1e-9)) + 1
        return t0 + args.dt * np.arange(n)
    n = 2001 if args.n_samples is None else args.n_samples
    if n < 2:
        raise ConfigError("--n-samples must be at least 2")
    return np.linspace(t0, t1, n)


def _check_span(args):
    if not args.t_end > args.t0:
        raise ConfigError("--t-end must exceed --t0")


def cmd_simulate(args) -> str:
    _check_span(args)
    params = _params(args)
    cfg = IntegratorConfig(args.rtol, args.atol, args.max_step, args.initial_step,
                           args.t_end, args.method)
    traj = integrate(InitialData(args.t0, args.a0, args.b0), params, cfg)
    if args.dt is None and args.n_samples is None:
        t, z = traj.t, traj.z
    else:
        t = _grid(args, args.t0, args.t_end)
        z = traj.states(t)
    return io.format_table(io.TRAJECTORY_COLUMNS, io.trajectory_rows(t, z), args.format)


def cmd_rg(args) -> str:
    _check_span(args)
    params = _params(args)
    sign = 1 if args.sign == "+" else -1
    b0 = args.b0
    if b0 is None:
        if args.branch == "limit":
            if params.mu2 == 0 or params.mu1 / params.mu2 < 0:
                raise ConfigError("limit branch needs mu2 != 0 and mu1/mu2 >= 0")
            b0 = sign * np.sqrt(params.mu1 / params.mu2) * args.a0
        else:
            b0 = 1.0
    sol = rg.rg_solution(InitialData(args.t0, args.a0, b0), params, rg.RGBranch(args.branch, sign))
    t = _grid(args, args.t0, args.t_end)
    return io.format_table(io.TRAJECTORY_COLUMNS, io.trajectory_rows(t, sol.states(t)), args.format)


def cmd_perturb(args) -> str:
    _check_span(args)
    params = _params(args)
    init = InitialData(args.t0, args.a0, args.b0)
    sol = ClosedFormSolution(lambda t: perturbative_solution(t, init, params))
    t = _grid(args, args.t0, args.t_end)
    return io.format_table(io.TRAJECTORY_COLUMNS, io.trajectory_rows(t, sol.states(t)), args.format)


def cmd_compare(args) -> str:
    sols = []
    for path in (args.file_a, args.file_b):
        try:
            sols.append(TabulatedSolution(*io.read_trajectory(path)))
        except (OSError, ValueError) as exc:
            raise ConfigError(str(exc)) from exc
    a, b = sols
    if args.window is None:
        window = (max(a.span[0], b.span[0]), min(a.span[1], b.span[1]))
    else:
        window = tuple(args.window)
    report = compare.trajectory_error(a, b, window, args.n_samples)
    classes = []
    for sol in sols:
        try:
            classes.append(compare.classify_orbit(sol, center_tol=args.center_tol,
                                                  window=window, omega=args.omega).tag)
        except TooShort:
            classes.append(None)
    return json.dumps({
        "sup_error": report.sup_error,
        "l2_error": report.l2_error,
        "window": list(report.window),
        "orbit_class_a": classes[0],
        "orbit_class_b": classes[1],
    }, indent=2) + "\n"


def cmd_spectrum(args) -> str:
    cfg = quantum.BasisConfig(args.n_max, args.omega)
    spec = quantum.eigenvalues(quantum.build_hamiltonian(_params(args), cfg))
    ev = spec.eigenvalues
    rows = np.column_stack([np.arange(len(ev)), ev.real, ev.imag])
    return io.format_table(["index", "re_E", "im_E"], rows, args.format)


def cmd_sweep(args) -> str:
    cfg = quantum.BasisConfig(args.n_max, args.omega)
    if args.values is not None:
        values = args.values
    else:
        if args.num < 1:
            raise ConfigError("--num must be positive")
        values = np.linspace(args.start, args.stop, args.num)
    if args.mode == "mu":
        res = quantum.sweep_mu(values, cfg, args.im_tol, args.interior, args.workers)
    else:
        res = quantum.sweep_ratio(args.mu1, values, cfg, args.im_tol, args.interior, args.workers)
    rows = [(c, r.F, r.F_unfiltered) for (c, _), r in zip(res.points, res.reports)]
    return io.format_table(["coupling", "F", "F_unfiltered"], rows, args.format)


def cmd_toy(args) -> str:
    if args.n_samples < 2:
        raise ConfigError("--n-samples must be at least 2")
    t = np.linspace(args.t0, args.t_end, args.n_samples)
    exact, pert, rgv = rg.toy_rg(t, args.t0, args.a, args.eps)
    return io.format_table(["t", "exact", "perturbative", "rg"],
                           np.column_stack([t, exact, pert, rgv]), args.format)


COMMANDS = {
    "simulate": cmd_simulate,
    "rg": cmd_rg,
    "perturb": cmd_perturb,
    "compare": cmd_compare,
    "spectrum": cmd_spectrum,
    "sweep": cmd_sweep,
    "toy": cmd_toy,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = COMMANDS[args.command](args)
    except (ConfigError, ManifoldViolation, ResonantDenominator, BadBracket, ValueError) as exc:
        print(f"ptvdp {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (StepUnderflow, NonFinite, NoConvergence) as exc:
        print(f"ptvdp {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    if args.out is None:
        sys.stdout.write(text)
    else:
        args.out.write_text(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
