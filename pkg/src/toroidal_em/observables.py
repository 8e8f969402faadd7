"""Electron observables of the field configuration.

Four quantities are computed both from printed closed forms and by
quadrature over the torus volume:

* RMS charge: volume integral of the pointwise time-RMS charge density
  (the oscillation amplitude over sqrt(2); uniform inside the tube).
* Magnetic moment: the closed form sqrt(2)*eps0*pi*c*E0*R0*r0^2*
  (1 + r0^2/(2R0^2)) is normative.  The (1/2) integral of R x J is kept
  as a labeled diagnostic: under the plain time-RMS convention it comes
  out a fixed factor above the closed form, and no available derivation
  pins down the intended convention, so the ratio is recorded rather
  than asserted.
* Angular momentum about z: integral of R times the time-averaged
  momentum-density magnitude; matches (1/c)*eps0*E0^2*pi^2*R0^2*r0^2*
  (1 + r0^2/(4R0^2)).  Magnitudes are reported: the time-averaged
  momentum circulates along -phi, and orientation commentary is left to
  report metadata.
* Total energy: integral of the normative energy density, matching
  eps0*pi^2*R0*r0^2*E0^2*(5/2 + r0^2/(8R0^2)).

Plus the phase velocity omega*R0, which is exactly 2c for a
Faraday-consistent configuration.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .constants import CODATA, PhysicalConstants
from .fields import AnsatzParams, energy_density_model, momentum_density_avg
from .geometry import QuadratureGrid, integrate


@dataclass(frozen=True)
class ValuePair:
    """An observable evaluated by closed form and by quadrature."""

    closed_form: float
    quadrature: float

    @property
    def rel_difference(self) -> float:
        """(quadrature - closed)/closed; 0/0 for a vanishing observable."""
        if self.closed_form == 0.0:
            return 0.0 if self.quadrature == 0.0 else float("inf")
        return (self.quadrature - self.closed_form) / self.closed_form


@dataclass(frozen=True)
class MomentDiagnostic:
    """(1/2) integral of (R x J)_z under the time-RMS convention."""

    value: float
    ratio_to_closed: float


@dataclass(frozen=True)
class ObservableSet:
    """All observables for one parameter set on one grid."""

    Q_rms: ValuePair        # C
    mu_z: ValuePair         # A m^2; quadrature member is the diagnostic
    L_z: ValuePair          # J s (magnitude)
    U: ValuePair            # J
    v_phase: float          # m/s
    mu_quadrature_ratio: float  # diagnostic / closed form, recorded not asserted


def q_rms(p: AnsatzParams, grid: QuadratureGrid,
          k: PhysicalConstants = CODATA) -> ValuePair:
    """RMS charge: closed form sqrt(2)*pi^2*eps0*E0*r0^2.

    The quadrature path integrates the pointwise time-RMS density
    eps0*E0/(sqrt(2)*R0), which is uniform inside the tube.
    """
    rms_density = k.eps0 * p.E0 / (np.sqrt(2.0) * p.R0)
    quad = integrate(np.full(grid.n_nodes, rms_density), grid)
    closed = np.sqrt(2.0) * np.pi**2 * k.eps0 * p.E0 * p.r0**2
    return ValuePair(closed_form=float(closed), quadrature=quad)


def magnetic_moment_closed(p: AnsatzParams, k: PhysicalConstants = CODATA) -> float:
    """Printed closed form sqrt(2)*eps0*pi*c*E0*R0*r0^2*(1 + r0^2/(2R0^2))."""
    return float(np.sqrt(2.0) * k.eps0 * np.pi * k.c * p.E0 * p.R0 * p.r0**2
                 * (1.0 + p.r0**2 / (2.0 * p.R0**2)))


def magnetic_moment_quadrature_diagnostic(p: AnsatzParams, grid: QuadratureGrid,
                                          k: PhysicalConstants = CODATA) -> MomentDiagnostic:
    """(1/2) integral of R * J_phi,RMS over the volume, with its ratio to the
    closed form.

    Diagnostic only — not an acceptance quantity.  The azimuthal current
    amplitude is eps0*omega*E0*(1 + R/R0); its time-RMS is that over
    sqrt(2).
    """
    j_phi_rms = k.eps0 * p.omega * p.E0 * (1.0 + grid.R / p.R0) / np.sqrt(2.0)
    value = 0.5 * integrate(grid.R * j_phi_rms, grid)
    closed = magnetic_moment_closed(p, k)
    ratio = value / closed if closed != 0.0 else float("nan")
    return MomentDiagnostic(value=float(value), ratio_to_closed=float(ratio))


def angular_momentum(p: AnsatzParams, grid: QuadratureGrid,
                     k: PhysicalConstants = CODATA) -> ValuePair:
    """|L_z|: closed form (1/c)*eps0*E0^2*pi^2*R0^2*r0^2*(1 + r0^2/(4R0^2)).

    Quadrature path integrates R times |p_phi| of the time-averaged
    momentum density.
    """
    p_phi = momentum_density_avg(grid.R, grid.phi, grid.z, p, k)[1]
    quad = integrate(grid.R * np.abs(p_phi), grid)
    closed = (k.eps0 * p.E0**2 * np.pi**2 * p.R0**2 * p.r0**2 / k.c
              * (1.0 + p.r0**2 / (4.0 * p.R0**2)))
    return ValuePair(closed_form=float(closed), quadrature=quad)


def total_energy(p: AnsatzParams, grid: QuadratureGrid,
                 k: PhysicalConstants = CODATA) -> ValuePair:
    """Total energy: closed form eps0*pi^2*R0*r0^2*E0^2*(5/2 + r0^2/(8R0^2))."""
    quad = integrate(energy_density_model(grid.R, grid.phi, grid.z, p, k), grid)
    closed = (k.eps0 * np.pi**2 * p.R0 * p.r0**2 * p.E0**2
              * (2.5 + p.r0**2 / (8.0 * p.R0**2)))
    return ValuePair(closed_form=float(closed), quadrature=quad)


def phase_velocity(p: AnsatzParams, k: PhysicalConstants = CODATA) -> float:
    """Speed of constant-phase surfaces along the axis circle, omega*R0.

    For a Faraday-consistent configuration this is exactly 2c; any other
    frequency is flagged with a warning and the literal omega*R0 is
    returned.
    """
    if p.is_faraday(k):
        return 2.0 * k.c
    warnings.warn(
        f"omega = {p.omega:.6e} rad/s is not the Faraday-consistent 2c/R0; "
        "phase velocity will not equal 2c",
        stacklevel=2,
    )
    return p.omega * p.R0


def compute_observables(p: AnsatzParams, grid: QuadratureGrid,
                        k: PhysicalConstants = CODATA) -> ObservableSet:
    """Evaluate every observable for one parameter set on one grid."""
    mu_closed = magnetic_moment_closed(p, k)
    diag = magnetic_moment_quadrature_diagnostic(p, grid, k)
    return ObservableSet(
        Q_rms=q_rms(p, grid, k),
        mu_z=ValuePair(closed_form=mu_closed, quadrature=diag.value),
        L_z=angular_momentum(p, grid, k),
        U=total_energy(p, grid, k),
        v_phase=phase_velocity(p, k),
        mu_quadrature_ratio=diag.ratio_to_closed,
    )
