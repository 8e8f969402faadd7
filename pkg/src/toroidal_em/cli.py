"""Command-line interface.

Subcommands:
    constants       dump the constant set and derived scales
    verify-maxwell  run the four residual checks on solved or given params
    observables     closed-form vs quadrature observables
    solve           thin-torus or full-corrections constraint solve
    report          one-shot full comparison report (json/csv/text)
    export-field    sample the fields on a regular cylindrical grid (CSV)

Exit codes: 0 success / all checks pass; 1 verification or claim
failure; 2 usage error; 3 I/O error.  Relative --output paths are
resolved under $TOROIDAL_EM_OUTDIR when that variable is set.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from dataclasses import dataclass

import numpy as np

from .constants import CODATA, codata_constants, derived_scales
from .fields import (charge_density, current_density, energy_density_model,
                     poynting_instantaneous, real_fields)
from .maxwell import SamplingConfig, full_verification
from .observables import compute_observables
from .report import SCHEMA_VERSION, build_full_report, render, to_jsonable
from .geometry import build_grid
from .solver import (ConstraintSystem, ConvergenceError, FULL,
                     ratio_report, solve_full, solve_thin_torus)

OUTDIR_ENV = "TOROIDAL_EM_OUTDIR"

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3

EXPORT_CSV_COLUMNS = "R,phi,z,t,E_R,E_phi,E_z,B_z,rho,J_R,J_phi,S_R,S_phi,u"


@dataclass(frozen=True)
class CliConfig:
    """Parsed flags shared across subcommands, with the documented defaults."""

    resolution: tuple[int, int, int] = (32, 64, 64)
    h: float = 1e-5
    samples: int = 1000
    seed: int = 42
    mode: str = "full"
    schwinger: bool = True
    output: str | None = None
    format: str = "json"

    @property
    def sampling(self) -> SamplingConfig:
        return SamplingConfig(n_points=self.samples, seed=self.seed, h=self.h)


def _resolve_output(path: str) -> str:
    outdir = os.environ.get(OUTDIR_ENV)
    if outdir and not os.path.isabs(path):
        return os.path.join(outdir, path)
    return path


def _emit(text: str, output: str | None) -> int:
    """Write to --output (or stdout); I/O problems exit with code 3."""
    if output is None:
        sys.stdout.write(text)
        return EXIT_OK
    path = _resolve_output(output)
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {path}: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {path}")
    return EXIT_OK


def _solve_for(config: CliConfig):
    """Solve per --mode/--schwinger and return (SolveResult, params)."""
    if config.mode == "thin":
        sr = solve_thin_torus(CODATA, include_schwinger=config.schwinger)
    else:
        sys_ = ConstraintSystem.for_electron(CODATA, mode=FULL,
                                             include_schwinger=config.schwinger)
        sr = solve_full(CODATA, sys_)
    return sr, sr.as_params(CODATA)


def cmd_constants(config: CliConfig) -> int:
    k = codata_constants()
    ds = derived_scales(k)
    values = {
        "c": k.c, "eps0": k.eps0, "mu0": k.mu0, "hbar": k.hbar,
        "e": k.e_charge, "m_e": k.m_e, "alpha": k.alpha,
        "r_c": ds.r_c, "E_S": ds.E_S, "mu_B": ds.mu_B, "omega_D": ds.omega_D,
    }
    if config.format == "csv":
        text = "name,value\n" + "".join(f"{n},{v!r}\n" for n, v in values.items())
    else:
        text = json.dumps(values, indent=2) + "\n"
    return _emit(text, config.output)


def cmd_verify_maxwell(config: CliConfig, omega_scale: float,
                       tol: float) -> int:
    sr, params = _solve_for(config)
    if omega_scale != 1.0:
        params = dataclasses.replace(params, omega=params.omega * omega_scale)
    reports = full_verification(params, config.sampling, CODATA, tol)
    text = json.dumps(to_jsonable(reports), indent=2) + "\n"
    code = _emit(text, config.output)
    if code != EXIT_OK:
        return code
    if not all(r.passed for r in reports):
        failed = [r.equation for r in reports if not r.passed]
        print(f"FAILED checks: {', '.join(failed)}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_observables(config: CliConfig) -> int:
    sr, params = _solve_for(config)
    grid = build_grid(params.geometry, config.resolution)
    obs = compute_observables(params, grid, CODATA)
    doc = to_jsonable(obs)
    for name in ("Q_rms", "mu_z", "L_z", "U"):
        pair = getattr(obs, name)
        doc[name]["rel_difference"] = pair.rel_difference
    doc["note"] = ("mu_z quadrature is the (1/2) integral of R x J_rms "
                   "diagnostic; see mu_quadrature_ratio")
    return _emit(json.dumps(doc, indent=2) + "\n", config.output)


def cmd_solve(config: CliConfig, tol: float, max_iter: int) -> int:
    try:
        if config.mode == "thin":
            sr = solve_thin_torus(CODATA, include_schwinger=config.schwinger)
        else:
            sys_ = ConstraintSystem.for_electron(CODATA, mode=FULL,
                                                 include_schwinger=config.schwinger)
            sr = solve_full(CODATA, sys_, tol=tol, max_iter=max_iter)
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(f"final residuals: {exc.residuals}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    rr = ratio_report(sr, derived_scales(CODATA), CODATA)
    doc = {"solution": to_jsonable(sr), "ratios": to_jsonable(rr)}
    return _emit(json.dumps(doc, indent=2) + "\n", config.output)


def cmd_report(config: CliConfig) -> int:
    report = build_full_report(CODATA, resolution=config.resolution,
                               sampling=config.sampling,
                               include_schwinger=config.schwinger)
    ext = {"json": "json", "csv": "csv", "text": "txt"}[config.format]
    output = config.output if config.output is not None else f"report.{ext}"
    code = _emit(render(report, config.format), output)
    if code != EXIT_OK:
        return code
    return EXIT_OK if report.overall_pass else EXIT_CHECK_FAILED


def cmd_export_field(config: CliConfig, times: list[float],
                     export_resolution: tuple[int, int, int]) -> int:
    """Sample fields on a regular cylindrical grid spanning the tube.

    The grid extends 20% beyond the tube in R and z so the export
    includes outside-torus rows (all-zero fields), making the mask
    visible to plotting tools.
    """
    sr, params = _solve_for(config)
    n_R, n_phi, n_z = export_resolution
    R = np.linspace(params.R0 - 1.2 * params.r0, params.R0 + 1.2 * params.r0, n_R)
    phi = 2.0 * np.pi * np.arange(n_phi) / n_phi
    z = np.linspace(-1.2 * params.r0, 1.2 * params.r0, n_z)
    Rg, pg, zg = (a.ravel() for a in np.meshgrid(R, phi, z, indexing="ij"))

    rows = [EXPORT_CSV_COLUMNS]
    for t in times:
        E, B = real_fields(Rg, pg, zg, t, params)
        rho = charge_density(Rg, pg, zg, t, params, CODATA)
        J = current_density(Rg, pg, zg, t, params, CODATA)
        S = poynting_instantaneous(Rg, pg, zg, t, params, CODATA)
        u = energy_density_model(Rg, pg, zg, params, CODATA)
        cols = np.column_stack([
            Rg, pg, zg, np.full_like(Rg, t),
            E[0], E[1], E[2], B[2], rho, J[0], J[1], S[0], S[1], u,
        ])
        rows.extend(",".join(repr(float(v)) for v in row) for row in cols)

    output = config.output if config.output is not None else "field_export.csv"
    code = _emit("\n".join(rows) + "\n", output)
    if code != EXIT_OK:
        return code

    header = {
        "schema_version": SCHEMA_VERSION,
        "columns": EXPORT_CSV_COLUMNS.split(","),
        "units": {
            "R": "m", "phi": "rad", "z": "m", "t": "s",
            "E_R": "V/m", "E_phi": "V/m", "E_z": "V/m", "B_z": "T",
            "rho": "C/m^3", "J_R": "A/m^2", "J_phi": "A/m^2",
            "S_R": "W/m^2", "S_phi": "W/m^2", "u": "J/m^3",
        },
        "conventions": {
            "components": "cylindrical (R, phi, z); E_z, B_R, B_phi, J_z, S_z vanish identically",
            "real_fields": "componentwise real part of the phasor e^{i(phi - omega t)}",
            "mask": "fields are exactly zero outside the tube (boundary counts as outside)",
            "u": "normative closed-form energy density eps0*E0^2*(1 + R/(4*R0))",
        },
        "params": to_jsonable(params),
        "times": list(times),
        "grid": {"n_R": n_R, "n_phi": n_phi, "n_z": n_z,
                 "R_span": [float(R[0]), float(R[-1])],
                 "z_span": [float(z[0]), float(z[-1])]},
    }
    header_path = os.path.splitext(output)[0] + ".header.json"
    return _emit(json.dumps(header, indent=2) + "\n", header_path)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toroidal-em",
        description="Workbench for the torus-confined rotating EM wave: "
                    "Maxwell residual checks, observables, constraint fit, reports.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, resolution=False, sampling=False, solver=False,
                   fmt=None):
        sp.add_argument("--output", help="output file (default: stdout)")
        if fmt:
            sp.add_argument("--format", choices=fmt, default=fmt[0])
        if resolution:
            sp.add_argument("--resolution", nargs=3, type=int,
                            default=[32, 64, 64],
                            metavar=("N_R", "N_THETA", "N_PHI"),
                            help="quadrature grid resolution")
        if sampling:
            sp.add_argument("--samples", type=int, default=1000,
                            help="residual sample count")
            sp.add_argument("--seed", type=int, default=42)
            sp.add_argument("--h", type=float, default=1e-5,
                            help="relative finite-difference step")
        if solver:
            sp.add_argument("--mode", choices=["thin", "full"], default="full",
                            help="constraint solve used for the parameters")
            sp.add_argument("--schwinger", choices=["on", "off"], default="on",
                            help="keep the (1 + alpha/2pi) factor in the moment target")

    sp = sub.add_parser("constants", help="dump constants and derived scales")
    add_common(sp, fmt=["json", "csv"])

    sp = sub.add_parser("verify-maxwell", help="run the four residual checks")
    add_common(sp, sampling=True, solver=True)
    sp.add_argument("--omega-scale", type=float, default=1.0,
                    help="detune omega by this factor before checking")
    sp.add_argument("--tol", type=float, default=1e-6,
                    help="normalized residual tolerance")

    sp = sub.add_parser("observables", help="closed-form vs quadrature observables")
    add_common(sp, resolution=True, solver=True)

    sp = sub.add_parser("solve", help="solve the three-constraint system")
    add_common(sp, solver=True)
    sp.add_argument("--tol", type=float, default=1e-12)
    sp.add_argument("--max-iter", type=int, default=50)

    sp = sub.add_parser("report", help="one-shot full comparison report")
    add_common(sp, resolution=True, sampling=True, fmt=["json", "csv", "text"])
    sp.add_argument("--schwinger", choices=["on", "off"], default="on")

    sp = sub.add_parser("export-field", help="sample fields on a regular grid as CSV")
    add_common(sp, solver=True)
    sp.add_argument("--export-resolution", nargs=3, type=int,
                    default=[16, 36, 16], metavar=("N_R", "N_PHI", "N_Z"))
    sp.add_argument("--time", type=float, action="append",
                    help="time slice in seconds (repeatable; default 0)")
    return parser


def _config_from(args: argparse.Namespace) -> CliConfig:
    return CliConfig(
        resolution=tuple(getattr(args, "resolution", (32, 64, 64))),
        h=getattr(args, "h", 1e-5),
        samples=getattr(args, "samples", 1000),
        seed=getattr(args, "seed", 42),
        mode=getattr(args, "mode", "full"),
        schwinger=getattr(args, "schwinger", "on") == "on",
        output=getattr(args, "output", None),
        format=getattr(args, "format", "json"),
    )


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = _config_from(args)
    if args.command == "constants":
        return cmd_constants(config)
    if args.command == "verify-maxwell":
        return cmd_verify_maxwell(config, args.omega_scale, args.tol)
    if args.command == "observables":
        return cmd_observables(config)
    if args.command == "solve":
        return cmd_solve(config, args.tol, args.max_iter)
    if args.command == "report":
        return cmd_report(config)
    if args.command == "export-field":
        times = args.time if args.time else [0.0]
        return cmd_export_field(config, times, tuple(args.export_resolution))
    raise AssertionError(f"unhandled command {args.command}")


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
