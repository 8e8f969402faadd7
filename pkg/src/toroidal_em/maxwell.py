"""Maxwell-equation residual verification for the torus ansatz.

Each of the four laws is checked two independent ways at seeded random
interior (point, time) samples:

* analytically, from hand-differentiated closed forms of the fields, and
* numerically, with second-order central finite differences in space
  (cylindrical div/curl) and in time.

Per-equation residuals are normalized by the natural field-derivative
scale so that a passing check means "the law holds to ~1e-6 of the terms
involved" independent of amplitude and of SI magnitudes.  Sampling stays
at least ``BOUNDARY_MARGIN_STEPS`` finite-difference steps away from the
tube boundary, where the confinement mask makes derivatives undefined.

Verification is interior-only by construction: surface (delta-function)
contributions of the mask discontinuity at r = r0 are out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constants import CODATA, PhysicalConstants
from .fields import AnsatzParams, charge_density, current_density, real_fields
from .geometry import TorusGeometry

# Samples closer than this many FD steps to the tube boundary are rejected.
BOUNDARY_MARGIN_STEPS = 10.0

DEFAULT_TOLERANCE = 1e-6

# Relative omega mismatch |omega*R0/(2c) - 1| above which the Faraday
# check is considered detuned regardless of the residual magnitude.
FARADAY_OMEGA_TOL = 1e-9


@dataclass(frozen=True)
class SamplingConfig:
    """Residual-check sampling: point count, RNG seed, and FD step.

    ``h`` is relative: spatial steps are h*R0 in R and z and h radians
    in phi; the time step is h periods / (2*pi).
    """

    n_points: int = 1000
    seed: int = 42
    h: float = 1e-5


@dataclass(frozen=True)
class ResidualReport:
    """Outcome of one equation check at sampled interior points."""

    equation: str            # gauss_B | gauss_E | faraday | ampere_continuity
    n_points: int
    seed: int
    h: float
    max_rel_residual: float
    mean_rel_residual: float
    max_fd_residual: float        # largest |residual| from the FD path (raw units)
    max_analytic_residual: float  # largest |residual| from closed forms (raw units)
    normalization: str            # label of the scale dividing the residuals
    normalization_value: float
    tolerance: float
    passed: bool
    note: str = ""


class BoundaryProximityError(ValueError):
    """Point too close to the mask discontinuity for finite differences."""


def _check_margin(R, z, g: TorusGeometry, h: float, scale: float,
                  margin_steps: float) -> None:
    s = np.sqrt((np.asarray(R, dtype=float) - g.R0) ** 2 + np.asarray(z, dtype=float) ** 2)
    if np.any(np.abs(s - g.r0) < margin_steps * h * scale):
        raise BoundaryProximityError(
            f"point within {margin_steps} FD steps of the tube boundary; "
            "derivatives are undefined across the confinement mask"
        )


def fd_div_cylindrical(field, R, phi, z, h: float = 1e-5, scale: float | None = None,
                       geometry: TorusGeometry | None = None,
                       margin_steps: float = BOUNDARY_MARGIN_STEPS):
    """Central-difference cylindrical divergence of ``field`` at (R, phi, z).

    ``field(R, phi, z)`` must return the (R, phi, z) components on the
    leading axis.  Steps: h*scale in R and z (scale defaults to R itself,
    or to geometry.R0 when a geometry is given) and h radians in phi.
    When ``geometry`` is given, points within ``margin_steps`` FD steps
    of the tube boundary are rejected.
    """
    R = np.asarray(R, dtype=float)
    if scale is None:
        scale = geometry.R0 if geometry is not None else R
    if geometry is not None:
        _check_margin(R, z, geometry, h, float(np.max(scale)), margin_steps)
    dl = h * scale
    d_r = ((R + dl) * field(R + dl, phi, z)[0] - (R - dl) * field(R - dl, phi, z)[0]) / (2.0 * dl * R)
    d_phi = (field(R, phi + h, z)[1] - field(R, phi - h, z)[1]) / (2.0 * h * R)
    d_z = (field(R, phi, z + dl)[2] - field(R, phi, z - dl)[2]) / (2.0 * dl)
    return d_r + d_phi + d_z


def fd_curl_cylindrical(field, R, phi, z, h: float = 1e-5, scale: float | None = None,
                        geometry: TorusGeometry | None = None,
                        margin_steps: float = BOUNDARY_MARGIN_STEPS) -> np.ndarray:
    """Central-difference cylindrical curl; same conventions as the divergence."""
    R = np.asarray(R, dtype=float)
    if scale is None:
        scale = geometry.R0 if geometry is not None else R
    if geometry is not None:
        _check_margin(R, z, geometry, h, float(np.max(scale)), margin_steps)
    dl = h * scale
    f_rp = field(R + dl, phi, z)
    f_rm = field(R - dl, phi, z)
    f_pp = field(R, phi + h, z)
    f_pm = field(R, phi - h, z)
    f_zp = field(R, phi, z + dl)
    f_zm = field(R, phi, z - dl)
    curl_r = (f_pp[2] - f_pm[2]) / (2.0 * h * R) - (f_zp[1] - f_zm[1]) / (2.0 * dl)
    curl_phi = (f_zp[0] - f_zm[0]) / (2.0 * dl) - (f_rp[2] - f_rm[2]) / (2.0 * dl)
    curl_z = ((R + dl) * f_rp[1] - (R - dl) * f_rm[1]) / (2.0 * dl * R) \
        - (f_pp[0] - f_pm[0]) / (2.0 * h * R)
    return np.stack(np.broadcast_arrays(curl_r, curl_phi, curl_z))


def faraday_omega(g, k: PhysicalConstants = CODATA) -> float:
    """The unique frequency 2c/R0 at which Faraday's law holds."""
    R0 = g.R0 if isinstance(g, TorusGeometry) else float(g)
    if R0 <= 0.0:
        raise ValueError("major radius must be positive")
    return 2.0 * k.c / R0


def interior_samples(p: AnsatzParams, sampling: SamplingConfig,
                     margin_steps: float = BOUNDARY_MARGIN_STEPS):
    """Seeded random interior (R, phi, z, t) samples away from the boundary.

    Points are drawn uniformly over the tube cross-section shrunk by the
    FD margin; times cover one full period (or an R0/c interval for a
    static configuration).
    """
    rng = np.random.default_rng(sampling.seed)
    s_max = p.r0 - margin_steps * sampling.h * p.R0
    if s_max <= 0.0:
        raise ValueError("FD margin exceeds the tube radius; reduce h")
    s = s_max * np.sqrt(rng.uniform(size=sampling.n_points))
    theta = rng.uniform(0.0, 2.0 * np.pi, size=sampling.n_points)
    phi = rng.uniform(0.0, 2.0 * np.pi, size=sampling.n_points)
    period = 2.0 * np.pi / p.omega if p.omega > 0.0 else p.R0 / CODATA.c
    t = rng.uniform(0.0, period, size=sampling.n_points)
    return p.R0 + s * np.cos(theta), phi, s * np.sin(theta), t


def _report(equation: str, sampling: SamplingConfig, fd_res, an_res,
            norm_label: str, norm_value: float, tol: float,
            passed_extra: bool = True, note: str = "") -> ResidualReport:
    fd_res = np.atleast_1d(np.asarray(fd_res, dtype=float))
    an_res = np.atleast_1d(np.asarray(an_res, dtype=float))
    if norm_value == 0.0:
        # Degenerate (zero-amplitude) configuration: residuals are 0/0 and
        # every law holds vacuously.
        rel = np.zeros_like(fd_res)
        note = (note + " " if note else "") + "zero normalization (E0 = 0); residuals vacuous"
        passed_extra = True
    else:
        rel = np.maximum(np.abs(fd_res), np.abs(an_res)) / norm_value
    return ResidualReport(
        equation=equation,
        n_points=sampling.n_points,
        seed=sampling.seed,
        h=sampling.h,
        max_rel_residual=float(np.max(rel)),
        mean_rel_residual=float(np.mean(rel)),
        max_fd_residual=float(np.max(np.abs(fd_res))),
        max_analytic_residual=float(np.max(np.abs(an_res))),
        normalization=norm_label,
        normalization_value=norm_value,
        tolerance=tol,
        passed=bool(np.max(rel) < tol) and passed_extra,
        note=note,
    )


def check_gauss_B(p: AnsatzParams, sampling: SamplingConfig = SamplingConfig(),
                  k: PhysicalConstants = CODATA,
                  tol: float = DEFAULT_TOLERANCE) -> ResidualReport:
    """div B = 0, normalized by E0/(c*R0)."""
    R, phi, z, t = interior_samples(p, sampling)
    fd = fd_div_cylindrical(lambda R_, phi_, z_: real_fields(R_, phi_, z_, t, p)[1],
                            R, phi, z, sampling.h, scale=p.R0, geometry=p.geometry)
    analytic = np.zeros_like(fd)  # B has only a z-component independent of z
    return _report("gauss_B", sampling, fd, analytic,
                   "E0/(c*R0)", p.E0 / (k.c * p.R0), tol)


def check_gauss_E(p: AnsatzParams, sampling: SamplingConfig = SamplingConfig(),
                  k: PhysicalConstants = CODATA,
                  tol: float = DEFAULT_TOLERANCE) -> ResidualReport:
    """div E = rho/eps0, normalized by E0/R0."""
    R, phi, z, t = interior_samples(p, sampling)
    fd_div = fd_div_cylindrical(lambda R_, phi_, z_: real_fields(R_, phi_, z_, t, p)[0],
                                R, phi, z, sampling.h, scale=p.R0, geometry=p.geometry)
    source = charge_density(R, phi, z, t, p, k) / k.eps0
    an_div = (p.E0 / p.R0) * np.sin(phi - p.omega * t)  # hand-differentiated div E
    return _report("gauss_E", sampling, fd_div - source, an_div - source,
                   "E0/R0", p.E0 / p.R0, tol)


def check_faraday(p: AnsatzParams, sampling: SamplingConfig = SamplingConfig(),
                  k: PhysicalConstants = CODATA,
                  tol: float = DEFAULT_TOLERANCE) -> ResidualReport:
    """curl E + dB/dt = 0, normalized by E0/R0.

    Passes only when the residual is small AND omega matches 2c/R0 to
    ``FARADAY_OMEGA_TOL`` relative — the law holds at exactly one
    frequency, so a detuned configuration must fail.
    """
    R, phi, z, t = interior_samples(p, sampling)
    psi = phi - p.omega * t

    fd_curl = fd_curl_cylindrical(lambda R_, phi_, z_: real_fields(R_, phi_, z_, t, p)[0],
                                  R, phi, z, sampling.h, scale=p.R0, geometry=p.geometry)
    dt = sampling.h * (2.0 * np.pi / p.omega if p.omega > 0.0 else p.R0 / k.c) / (2.0 * np.pi)
    fd_dbdt = (real_fields(R, phi, z, t + dt, p)[1] - real_fields(R, phi, z, t - dt, p)[1]) / (2.0 * dt)
    fd_res = np.linalg.norm(fd_curl + fd_dbdt, axis=0)

    # closed forms: curl E = -2(E0/R0)cos(psi) a_z; dB_z/dt = omega*B0*cos(psi)
    an_res = np.abs(-2.0 * p.E0 / p.R0 * np.cos(psi) + p.omega * p.B0 * np.cos(psi))

    omega_ok = p.is_faraday(k, FARADAY_OMEGA_TOL)
    note = "" if omega_ok else \
        f"omega detuned from 2c/R0 by {p.omega * p.R0 / (2.0 * k.c) - 1.0:+.3e} relative"
    return _report("faraday", sampling, fd_res, an_res,
                   "E0/R0", p.E0 / p.R0, tol, passed_extra=omega_ok, note=note)


def check_continuity(p: AnsatzParams, sampling: SamplingConfig = SamplingConfig(),
                     k: PhysicalConstants = CODATA,
                     tol: float = DEFAULT_TOLERANCE) -> ResidualReport:
    """Charge continuity div J + drho/dt = 0, normalized by eps0*omega*E0/R0."""
    R, phi, z, t = interior_samples(p, sampling)
    psi = phi - p.omega * t

    fd_div = fd_div_cylindrical(lambda R_, phi_, z_: current_density(R_, phi_, z_, t, p, k),
                                R, phi, z, sampling.h, scale=p.R0, geometry=p.geometry)
    dt = sampling.h * (2.0 * np.pi / p.omega if p.omega > 0.0 else p.R0 / k.c) / (2.0 * np.pi)
    fd_drho = (charge_density(R, phi, z, t + dt, p, k)
               - charge_density(R, phi, z, t - dt, p, k)) / (2.0 * dt)
    fd_res = fd_div + fd_drho

    # closed forms: div J = eps0*omega*(E0/R0)*cos(psi) = -drho/dt exactly
    an_div = k.eps0 * p.omega * p.E0 / p.R0 * np.cos(psi)
    an_drho = -k.eps0 * p.E0 / p.R0 * p.omega * np.cos(psi)
    return _report("ampere_continuity", sampling, fd_res, an_div + an_drho,
                   "eps0*omega*E0/R0", k.eps0 * p.omega * p.E0 / p.R0, tol)


def full_verification(p: AnsatzParams, sampling: SamplingConfig = SamplingConfig(),
                      k: PhysicalConstants = CODATA,
                      tol: float = DEFAULT_TOLERANCE) -> list[ResidualReport]:
    """Run all four checks; the configuration passes iff every report does."""
    return [
        check_gauss_B(p, sampling, k, tol),
        check_gauss_E(p, sampling, k, tol),
        check_faraday(p, sampling, k, tol),
        check_continuity(p, sampling, k, tol),
    ]
