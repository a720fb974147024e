"""Command line front end: ``sweep``, ``demo`` and ``verify``.

Exit codes: 0 success, 1 tolerance or suite failure, 2 usage or I/O error.
Angles are radians throughout.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import asdict, dataclass, field

import numpy as np

from . import entangle, measures, premeasure, qubit_analytic
from .errors import WyskewError
from .states import SIGMA_Z, SphericalBloch, density_from_bloch, spherical_to_cartesian
from .verify import run_suites

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

COLUMNS = (
    "n",
    "theta",
    "phi",
    "skew_closed",
    "skew_numeric",
    "mixedness",
    "negativity_closed",
    "negativity_numeric",
    "abs_diff",
)

DEFAULT_PHIS = (0.0, math.pi / 2, math.pi)


@dataclass
class SweepConfig:
    n_steps: int = 11
    theta_steps: int = 13
    phi_values: list[float] = field(default_factory=lambda: list(DEFAULT_PHIS))
    tolerance: float = 1e-9
    output_path: str = "sweep.csv"
    format: str = "csv"
    theta_max: float = math.pi

    def __post_init__(self):
        if self.n_steps < 2 or self.theta_steps < 2:
            raise ValueError("n_steps and theta_steps must be at least 2")
        if not self.phi_values:
            raise ValueError("at least one phi value is required")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if not 0.0 < self.theta_max <= math.pi:
            raise ValueError("theta_max must lie in (0, pi]")
        if self.format not in ("csv", "json"):
            raise ValueError(f"unknown format {self.format!r}")


def sweep_rows(config: SweepConfig) -> list[dict]:
    rows = []
    for p in qubit_analytic.scan_grid(
        config.n_steps, config.theta_steps, config.phi_values, config.theta_max
    ):
        rows.append(
            {
                "n": p.n,
                "theta": p.theta,
                "phi": p.phi,
                "skew_closed": p.skew,
                "skew_numeric": p.skew_numeric,
                "mixedness": p.mixedness,
                "negativity_closed": p.negativity_closed,
                "negativity_numeric": p.negativity_numeric,
                "abs_diff": p.abs_diff,
            }
        )
    return rows


def _fmt(x: float) -> str:
    return format(x, ".17g")


def write_rows(rows: list[dict], config: SweepConfig) -> None:
    with open(config.output_path, "w", newline="") as fh:
        if config.format == "csv":
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(COLUMNS)
            for row in rows:
                writer.writerow([_fmt(row[c]) for c in COLUMNS])
        else:
            payload = {
                "config": asdict(config),
                "max_abs_diff": max(r["abs_diff"] for r in rows),
                "columns": list(COLUMNS),
                "rows": rows,
            }
            json.dump(payload, fh, indent=1)
            fh.write("\n")


def cmd_sweep(config: SweepConfig, out=None) -> int:
    out = out or sys.stdout
    rows = sweep_rows(config)
    try:
        write_rows(rows, config)
    except OSError as exc:
        print(f"error: cannot write {config.output_path}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    worst = max(r["abs_diff"] for r in rows)
    ok = worst <= config.tolerance
    print(
        f"{len(rows)} grid points -> {config.output_path}; "
        f"max |N_closed - N_numeric| = {worst:.3e} (tol {config.tolerance:.1e}) "
        f"{'OK' if ok else 'TOLERANCE EXCEEDED'}",
        file=out,
    )
    return EXIT_OK if ok else EXIT_FAIL


def cmd_demo(n: float, theta: float, phi: float, out=None) -> int:
    out = out or sys.stdout
    sph = SphericalBloch(n, theta, phi)
    b = spherical_to_cartesian(sph)
    rho = density_from_bloch(b)
    joint = premeasure.premeasure_state(rho, premeasure.sigma_z_setup())
    skew_c = qubit_analytic.skew_closed_form_spherical(sph)
    skew_n = measures.skew_information(rho, SIGMA_Z)
    skew_r = measures.skew_information_rewritten(rho, SIGMA_Z)
    mix = measures.mixedness(rho)
    neg_closed = qubit_analytic.negativity_closed_form(skew_c, qubit_analytic.mixedness_closed_form(n), n)
    neg_tn = entangle.negativity(joint, 2, 2)
    neg_ev = entangle.negative_eigenvalue_sum(joint, 2, 2)
    holds = abs(neg_closed - neg_tn) <= 1e-9

    with np.printoptions(precision=6, suppress=True):
        print(f"Bloch vector      n = ({b.n_x:.6f}, {b.n_y:.6f}, {b.n_z:.6f}), |n| = {n:.6f}", file=out)
        print(f"input state rho_in =\n{rho.matrix}", file=out)
        print(f"premeasurement state (system (x) apparatus) =\n{joint.matrix}", file=out)
    print(f"skew information  closed = {skew_c:.12f}  commutator = {skew_n:.12f}  "
          f"trace form = {skew_r:.12f}", file=out)
    print(f"mixedness         {mix:.12f}", file=out)
    print(f"negativity        closed = {neg_closed:.12f}  trace norm = {neg_tn:.12f}  "
          f"negative eigenvalues = {neg_ev:.12f}", file=out)
    if neg_tn <= 1e-12:
        verdict = "no entanglement"
    elif abs(neg_tn - 0.5) <= 1e-9:
        verdict = "maximally entangled"
    else:
        verdict = "partially entangled"
    print(f"system-apparatus: {verdict}", file=out)
    print(f"closed-form relation holds at 1e-9: {'yes' if holds else 'NO'}", file=out)
    return EXIT_OK if holds else EXIT_FAIL


def cmd_verify(seed: int = 2024, cases: int = 200, tolerance: float | None = None, out=None) -> int:
    out = out or sys.stdout
    results = run_suites(seed, cases, tolerance)
    for r in results:
        print(r.line(), file=out)
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} suites passed (seed={seed}, cases={cases})", file=out)
    return EXIT_OK if not failed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wyskew",
        description="Premeasurement entanglement, skew information and mixedness for qubits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sw = sub.add_parser("sweep", help="grid sweep over (n, theta, phi) written as CSV or JSON")
    sw.add_argument("--n-steps", type=int, default=11)
    sw.add_argument("--theta-steps", type=int, default=13)
    sw.add_argument("--theta-max", type=float, default=math.pi, help="upper end of the theta axis")
    sw.add_argument("--phi", type=float, nargs="+", default=list(DEFAULT_PHIS), help="azimuths (radians)")
    sw.add_argument("--tol", type=float, default=1e-9)
    sw.add_argument("--out", default=None, help="output file (default sweep.<format>)")
    sw.add_argument("--format", choices=("csv", "json"), default="csv")

    de = sub.add_parser("demo", help="report every quantity at one Bloch vector")
    de.add_argument("--n", type=float, required=True, help="Bloch length in [0, 1]")
    de.add_argument("--theta", type=float, required=True, help="polar angle in [0, pi]")
    de.add_argument("--phi", type=float, default=0.0, help="azimuth in [0, 2 pi)")

    ve = sub.add_parser("verify", help="run all invariant suites")
    ve.add_argument("--seed", type=int, default=2024)
    ve.add_argument("--cases", type=int, default=200)
    ve.add_argument("--tol", type=float, default=None, help="override every suite tolerance")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "sweep":
            config = SweepConfig(
                n_steps=args.n_steps,
                theta_steps=args.theta_steps,
                phi_values=list(args.phi),
                tolerance=args.tol,
                output_path=args.out or f"sweep.{args.format}",
                format=args.format,
                theta_max=args.theta_max,
            )
            return cmd_sweep(config)
        if args.command == "demo":
            return cmd_demo(args.n, args.theta, args.phi)
        if args.cases < 1:
            raise ValueError("--cases must be at least 1")
        return cmd_verify(args.seed, args.cases, args.tol)
    except (WyskewError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
