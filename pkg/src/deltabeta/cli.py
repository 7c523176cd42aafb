"""Command-line front end: identity suites, sweeps, convergence tables.

Every command emits one table row per (regularization value, test
function) with a fixed schema and prints one PASS/FAIL summary line per
asserted property.  CSV and JSON are two serializations of the same
records; floats are written in round-trip-exact form (17 significant
digits), so identical runs produce byte-identical files.

For the gamma-suite rows the ``phi`` column carries the identity name,
``action_re``/``abs_err`` the measured worst error and ``rel_err`` the
error as a fraction of its tolerance.  For cor2 rows the gamma-quotient
route fills ``reg_value_a`` and the truncated-Fourier route fills
``reg_value_b``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from .errors import DeltaBetaError, DomainError
from .quadrature import QuadratureConfig
from .regularized_beta import smooth_factor
from .special_functions import digamma, gamma, log_gamma, trigamma
from .test_functions import REGISTRY, get_test_function
from .weak_limits import (
    ConvergenceRecord,
    action_theorem,
    action_lemma,
    action_truncated_fourier,
    sweep,
    verify_corollary3,
    verify_diag_limit,
    verify_offdiag_limit,
    verify_sokhotski,
)

__all__ = ["RunSpec", "run", "main"]

COMMANDS = (
    "gamma-suite",
    "theorem",
    "lemma",
    "cor2",
    "cor3",
    "sokhotski",
    "offdiag",
    "diag",
    "all",
)

COLUMNS = (
    "command",
    "phi",
    "reg_value_a",
    "reg_value_b",
    "n",
    "k",
    "action_re",
    "action_im",
    "target",
    "abs_err",
    "rel_err",
    "pass",
)

_DEFAULT_SCHEDULES = {
    "theorem": (1e-1, 1e-2, 1e-3),
    "lemma": (1e-1, 1e-2, 1e-3),
    "cor2": (1e-1, 1e-2, 1e-3),
    "cor3": (1e-3,),
    "sokhotski": (1e-2, 1e-3, 1e-4),
    "diag": (1e-4,),
    "offdiag": (1e-3,),
}

# suite-level tolerances
_GAMMA_IDENTITY_TOL = 1e-10
_FINITE_DIFF_TOL = 1e-6
_SWEEP_FINAL_TOL = 1e-2
_ROUTE_TOL = 2e-2
_COEFF_TOL = 2e-2
_SOKHOTSKI_TOL = 1e-3
_DIAG_TOL = 2e-2
_DIAG_PAIR_TOL = 4e-2
_OFFDIAG_ABS_TOL = 5e-2

_CLI_CONFIG = QuadratureConfig(abs_tol=1e-9, rel_tol=1e-9)


@dataclass
class RunSpec:
    """Everything one invocation needs; built by main() from flags."""

    command: str
    phi_label: str = "gaussian"
    schedule: Optional[List[float]] = None
    n: int = 1
    k: int = 1
    output_format: str = "csv"
    output_path: Optional[str] = None
    tolerances: QuadratureConfig = field(default_factory=lambda: _CLI_CONFIG)


def _row(command, phi, rec: ConvergenceRecord, n=0, k=0, passed=False, route_b=False):
    reg_a, reg_b = rec.eps, rec.eps_b if rec.eps_b is not None else rec.eps
    if route_b:
        reg_a, reg_b = 0.0, rec.eps
    return {
        "command": command,
        "phi": phi,
        "reg_value_a": reg_a,
        "reg_value_b": reg_b,
        "n": n,
        "k": k,
        "action_re": rec.action_re,
        "action_im": rec.action_im,
        "target": rec.target,
        "abs_err": rec.abs_err,
        "rel_err": rec.rel_err,
        "pass": passed,
    }


def _mark(rows, passed):
    for r in rows:
        r["pass"] = passed
    return rows


def _sweep_verdict(result, final_tol):
    ok = not result.failures and result.records
    if ok and len(result.records) >= 2:
        ok = bool(result.rel_err_monotone)
    return bool(ok and result.final_rel_err is not None and result.final_rel_err < final_tol)


def _gamma_suite(cfg) -> Tuple[list, list]:
    re = np.linspace(0.1, 5.0, 20)
    im = np.linspace(-10.0, 10.0, 10)
    z = (re[:, None] + 1j * im[None, :]).ravel()
    gz = gamma(z)
    gz1 = gamma(z + 1)
    recurrence = float(np.max(np.abs(gz1 - z * gz) / np.abs(gz1)))
    reflection = float(np.max(np.abs(gz * gamma(1 - z) * np.sin(np.pi * z) / np.pi - 1)))
    conjugate = float(np.max(np.abs(gamma(np.conj(z)) - np.conj(gz)) / np.abs(gz)))
    h = 1e-5
    dig = float(np.max(np.abs(digamma(z) - (log_gamma(z + h) - log_gamma(z - h)) / (2 * h))))
    tri = float(np.max(np.abs(trigamma(z) - (digamma(z + h) - digamma(z - h)) / (2 * h))))

    checks = [
        ("recurrence", recurrence, _GAMMA_IDENTITY_TOL),
        ("reflection", reflection, _GAMMA_IDENTITY_TOL),
        ("conjugate_symmetry", conjugate, _GAMMA_IDENTITY_TOL),
        ("digamma_fd", dig, _FINITE_DIFF_TOL),
        ("trigamma_fd", tri, _FINITE_DIFF_TOL),
    ]
    rows, summaries = [], []
    for name, err, tol in checks:
        ok = err < tol
        rows.append(
            {
                "command": "gamma-suite",
                "phi": name,
                "reg_value_a": 0.0,
                "reg_value_b": 0.0,
                "n": 0,
                "k": 0,
                "action_re": err,
                "action_im": 0.0,
                "target": 0.0,
                "abs_err": err,
                "rel_err": err / tol,
                "pass": ok,
            }
        )
        summaries.append((f"gamma-suite {name} max_err={err:.3e} tol={tol:g}", ok))
    return rows, summaries


def _theorem_like(command, op, phi_label, schedule, cfg):
    phi = get_test_function(phi_label)
    result = sweep(op, schedule, phi, cfg)
    ok = _sweep_verdict(result, _SWEEP_FINAL_TOL)
    rows = _mark([_row(command, phi_label, r) for r in result.records], ok)
    detail = (
        f"{command} phi={phi_label} final_rel_err="
        f"{result.final_rel_err if result.final_rel_err is not None else math.nan:.3e} "
        f"monotone={result.rel_err_monotone}"
    )
    summaries = [(detail, ok)]
    for value, message in result.failures:
        summaries.append((f"{command} phi={phi_label} value={value}: {message}", False))
    return rows, summaries


def _cor2_suite(phi_label, schedule, cfg):
    phi = get_test_function(phi_label)
    sweep_a = sweep(action_theorem, schedule, phi, cfg)
    sweep_b = sweep(action_truncated_fourier, schedule, phi, cfg)
    ok = (
        not sweep_a.failures
        and not sweep_b.failures
        and sweep_a.records
        and sweep_b.records
        and sweep_a.final_rel_err < _ROUTE_TOL
        and sweep_b.final_rel_err < _ROUTE_TOL
    )
    gap = math.nan
    if sweep_a.records and sweep_b.records:
        rec_a, rec_b = sweep_a.records[-1], sweep_b.records[-1]
        scale = abs(rec_a.target) if rec_a.target else 1.0
        gap = abs(rec_a.action - rec_b.action) / scale
        ok = bool(ok and gap < _ROUTE_TOL)
    else:
        ok = False
    rows = [_row("cor2", phi_label, r) for r in sweep_a.records]
    rows += [_row("cor2", phi_label, r, route_b=True) for r in sweep_b.records]
    _mark(rows, ok)
    summaries = [(f"cor2 phi={phi_label} route_gap={gap:.3e}", ok)]
    for value, message in sweep_a.failures + sweep_b.failures:
        summaries.append((f"cor2 phi={phi_label} value={value}: {message}", False))
    return rows, summaries


def _cor3_suite(phi_label, schedule, n, k, cfg):
    phi = get_test_function(phi_label)
    rows, summaries = [], []
    for eps in schedule:
        rec = verify_corollary3(eps, n, k, phi, cfg)
        ok = rec.rel_err < _COEFF_TOL
        rows.append(_row("cor3", phi_label, rec, n=n, k=k, passed=ok))
        summaries.append(
            (f"cor3 phi={phi_label} n={n} k={k} eps={eps:g} rel_err={rec.rel_err:.3e}", ok)
        )
    return rows, summaries


def _sokhotski_suite(phi_label, schedule, cfg):
    phi = get_test_function(phi_label)
    result = sweep(verify_sokhotski, schedule, phi, cfg)
    ok = _sweep_verdict(result, _SOKHOTSKI_TOL)
    rows = _mark([_row("sokhotski", phi_label, r) for r in result.records], ok)
    detail = (
        f"sokhotski phi={phi_label} final_rel_err="
        f"{result.final_rel_err if result.final_rel_err is not None else math.nan:.3e} "
        f"monotone={result.rel_err_monotone}"
    )
    summaries = [(detail, ok)]
    for value, message in result.failures:
        summaries.append((f"sokhotski phi={phi_label} value={value}: {message}", False))
    return rows, summaries


def _diag_suite(phi_label, schedule, cfg):
    phi = get_test_function(phi_label)
    eps = schedule[-1]
    pairs = ((eps, eps), (10 * eps, eps), (eps, 10 * eps))
    recs = [verify_diag_limit(a, b, phi, cfg) for a, b in pairs]
    ok = all(r.rel_err < _DIAG_TOL for r in recs)
    scale = abs(recs[0].target) if recs[0].target else 1.0
    for r1 in recs:
        for r2 in recs:
            ok = ok and abs(r1.action - r2.action) / scale < _DIAG_PAIR_TOL
    rows = _mark([_row("diag", phi_label, r) for r in recs], bool(ok))
    worst = max(r.rel_err for r in recs)
    return rows, [(f"diag phi={phi_label} eps={eps:g} worst_rel_err={worst:.3e}", bool(ok))]


def _offdiag_suite(phi_label, schedule, cfg):
    phi = get_test_function(phi_label)
    ab = schedule[-1]
    rec = verify_offdiag_limit(ab, ab, (phi, phi), cfg)
    ok = rec.abs_err < _OFFDIAG_ABS_TOL
    rows = _mark([_row("offdiag", phi_label, rec)], ok)
    return rows, [(f"offdiag phi={phi_label} a=b={ab:g} abs_err={rec.abs_err:.3e}", ok)]


def _lemma_op(eps, phi, cfg):
    return action_lemma(eps, smooth_factor, phi, cfg)


def _dispatch(spec: RunSpec) -> Tuple[list, list]:
    cfg = spec.tolerances
    schedule = spec.schedule or list(_DEFAULT_SCHEDULES.get(spec.command, (1e-3,)))
    if spec.command == "gamma-suite":
        return _gamma_suite(cfg)
    if spec.command == "theorem":
        return _theorem_like("theorem", action_theorem, spec.phi_label, schedule, cfg)
    if spec.command == "lemma":
        return _theorem_like("lemma", _lemma_op, spec.phi_label, schedule, cfg)
    if spec.command == "cor2":
        return _cor2_suite(spec.phi_label, schedule, cfg)
    if spec.command == "cor3":
        return _cor3_suite(spec.phi_label, schedule, spec.n, spec.k, cfg)
    if spec.command == "sokhotski":
        return _sokhotski_suite(spec.phi_label, schedule, cfg)
    if spec.command == "diag":
        return _diag_suite(spec.phi_label, schedule, cfg)
    if spec.command == "offdiag":
        return _offdiag_suite(spec.phi_label, schedule, cfg)
    if spec.command == "all":
        rows, summaries = [], []
        r, s = _gamma_suite(cfg)
        rows += r
        summaries += s
        for label in REGISTRY:
            r, s = _theorem_like(
                "theorem", action_theorem, label,
                spec.schedule or list(_DEFAULT_SCHEDULES["theorem"]), cfg,
            )
            rows += r
            summaries += s
        r, s = _theorem_like(
            "lemma", _lemma_op, spec.phi_label,
            spec.schedule or list(_DEFAULT_SCHEDULES["lemma"]), cfg,
        )
        rows += r
        summaries += s
        r, s = _cor2_suite(
            spec.phi_label, spec.schedule or list(_DEFAULT_SCHEDULES["cor2"]), cfg
        )
        rows += r
        summaries += s
        for n, k in ((0, 1), (1, 0), (1, 1), (2, 1)):
            r, s = _cor3_suite(
                spec.phi_label,
                spec.schedule or list(_DEFAULT_SCHEDULES["cor3"]), n, k, cfg,
            )
            rows += r
            summaries += s
        r, s = _sokhotski_suite(
            spec.phi_label, spec.schedule or list(_DEFAULT_SCHEDULES["sokhotski"]), cfg
        )
        rows += r
        summaries += s
        r, s = _diag_suite(
            spec.phi_label, spec.schedule or list(_DEFAULT_SCHEDULES["diag"]), cfg
        )
        rows += r
        summaries += s
        r, s = _offdiag_suite(
            spec.phi_label, spec.schedule or list(_DEFAULT_SCHEDULES["offdiag"]), cfg
        )
        rows += r
        summaries += s
        return rows, summaries
    raise DomainError(f"unknown command {spec.command!r}")


def _format_cell(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def _serialize(rows, fmt):
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(COLUMNS)
        for row in rows:
            writer.writerow([_format_cell(row[c]) for c in COLUMNS])
        return buf.getvalue()
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    raise DomainError(f"unknown output format {fmt!r}")


def run(spec: RunSpec) -> int:
    """Execute a RunSpec; returns the process exit code."""
    try:
        if spec.command not in COMMANDS:
            raise DomainError(f"unknown command {spec.command!r}")
        if spec.schedule is not None:
            if not spec.schedule or any(not v > 0 for v in spec.schedule):
                raise DomainError("schedule must be positive")
            if any(u <= v for u, v in zip(spec.schedule, spec.schedule[1:])):
                raise DomainError("schedule must be strictly decreasing")
        if spec.output_format not in ("csv", "json"):
            raise DomainError(f"unknown output format {spec.output_format!r}")
        if spec.phi_label not in REGISTRY:
            raise DomainError(f"unknown test function {spec.phi_label!r}")
        if spec.n < 0 or spec.k < 0:
            raise DomainError("n and k must be nonnegative")
    except DeltaBetaError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2

    try:
        rows, summaries = _dispatch(spec)
    except DeltaBetaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    text = _serialize(rows, spec.output_format)
    if spec.output_path:
        with open(spec.output_path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    all_ok = True
    for detail, ok in summaries:
        print(("PASS " if ok else "FAIL ") + detail)
        all_ok = all_ok and ok
    return 0 if all_ok else 1


def _parse_schedule(text):
    try:
        values = [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    if not values:
        raise argparse.ArgumentTypeError("empty schedule")
    return values


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="deltabeta",
        description="Verify the Dirac-delta weak limits of the regularized "
        "Euler beta function and emit convergence tables.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--phi", default="gaussian", help="test function label")
    parser.add_argument(
        "--schedule",
        type=_parse_schedule,
        default=None,
        help="comma-separated decreasing regularization values",
    )
    parser.add_argument("--n", type=int, default=1)
    parser.add_argument("--k", type=int, default=1)
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--out", default=None, help="output table path")
    parser.add_argument("--abs-tol", type=float, default=_CLI_CONFIG.abs_tol)
    parser.add_argument("--rel-tol", type=float, default=_CLI_CONFIG.rel_tol)
    parser.add_argument(
        "--max-subdiv", type=int, default=_CLI_CONFIG.max_subdivisions
    )
    args = parser.parse_args(argv)

    try:
        cfg = QuadratureConfig(
            abs_tol=args.abs_tol,
            rel_tol=args.rel_tol,
            max_subdivisions=args.max_subdiv,
        )
    except DeltaBetaError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2

    spec = RunSpec(
        command=args.command,
        phi_label=args.phi,
        schedule=args.schedule,
        n=args.n,
        k=args.k,
        output_format=args.format,
        output_path=args.out,
        tolerances=cfg,
    )
    return run(spec)


if __name__ == "__main__":
    sys.exit(main())
