"""Field evaluation for the torus-confined rotating-wave ansatz.

The model posits, in cylindrical components (R, phi, z) with the phase
psi = phi - omega*t and a mask H that is 1 strictly inside the torus tube
and 0 outside,

    E = i*E0*H*e^{i psi} * (a_R + i*(1 + R/R0)*a_phi)
    B = i*B0*H*e^{i psi} * a_z,           B0 = E0/c.

Physical fields are the componentwise real parts:

    E_R   = -E0*sin(psi)          E_phi = -E0*(1 + R/R0)*cos(psi)
    B_z   = -(E0/c)*sin(psi)

with all other components zero.  This convention reproduces the model's
real charge density (eps0*E0/R0)*sin(psi) and its time-averaged Poynting
vector -(1/2)*eps0*c*E0^2 * a_phi.

Derived pointwise quantities follow from the real fields: the divergence
of E plays the role of a geometric charge density, the Ampere-Maxwell law
defines the current density, and S = (E x B)/mu0.

All evaluators broadcast over numpy arrays.  Vector-valued functions
return an array whose leading axis is the cylindrical component
(R, phi, z).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constants import CODATA, PhysicalConstants
from .geometry import TorusGeometry


@dataclass(frozen=True)
class AnsatzParams:
    """Free parameters of the field configuration.

    Use :meth:`faraday` to construct with the self-consistent frequency
    omega = 2c/R0; :meth:`with_omega` exists for residual experiments
    with a detuned frequency.
    """

    E0: float      # electric amplitude [V/m]
    R0: float      # major radius [m]
    r0: float      # tube radius [m]
    omega: float   # angular frequency [rad/s]
    B0: float      # magnetic amplitude [T], always E0/c

    def __post_init__(self) -> None:
        if self.E0 < 0.0:
            raise ValueError("E0 must be >= 0")
        if not (0.0 < self.r0 < self.R0):
            raise ValueError("need 0 < r0 < R0")
        if self.omega < 0.0:
            raise ValueError("omega must be >= 0")

    @classmethod
    def faraday(cls, E0: float, R0: float, r0: float,
                k: PhysicalConstants = CODATA) -> "AnsatzParams":
        """Construct with the unique Faraday-consistent frequency 2c/R0."""
        return cls(E0=E0, R0=R0, r0=r0, omega=2.0 * k.c / R0, B0=E0 / k.c)

    @classmethod
    def with_omega(cls, E0: float, R0: float, r0: float, omega: float,
                   k: PhysicalConstants = CODATA) -> "AnsatzParams":
        """Construct with a free frequency (residual experiments only)."""
        return cls(E0=E0, R0=R0, r0=r0, omega=omega, B0=E0 / k.c)

    @property
    def geometry(self) -> TorusGeometry:
        return TorusGeometry(R0=self.R0, r0=self.r0)

    def is_faraday(self, k: PhysicalConstants = CODATA, tol: float = 1e-9) -> bool:
        """True when omega matches 2c/R0 within ``tol`` relative."""
        return abs(self.omega * self.R0 / (2.0 * k.c) - 1.0) < tol


@dataclass(frozen=True)
class ComplexFieldSample:
    """Phasor components at one cylindrical point and time."""

    R: float
    phi: float
    z: float
    t: float
    E_R: complex
    E_phi: complex
    E_z: complex
    B_R: complex
    B_phi: complex
    B_z: complex


@dataclass(frozen=True)
class RealFieldSample:
    """Real instantaneous fields and derived quantities at one point."""

    R: float
    phi: float
    z: float
    t: float
    E: tuple[float, float, float]
    B: tuple[float, float, float]
    rho: float
    J: tuple[float, float, float]
    S: tuple[float, float, float]
    u: float


def mask(R, z, p: AnsatzParams):
    """Torus-interior indicator: 1.0 strictly inside the tube, else 0.0."""
    R = np.asarray(R, dtype=float)
    z = np.asarray(z, dtype=float)
    return np.where((R - p.R0) ** 2 + z**2 < p.r0**2, 1.0, 0.0)


def _phase(phi, t, p: AnsatzParams):
    return np.asarray(phi, dtype=float) - p.omega * np.asarray(t, dtype=float)


def e_phasor(R, phi, z, t, p: AnsatzParams) -> np.ndarray:
    """Complex E phasor, components (R, phi, z) on the leading axis.

    E_R = i*E0*e^{i psi},  E_phi = -E0*(1 + R/R0)*e^{i psi},  E_z = 0.
    """
    R = np.asarray(R, dtype=float)
    h = mask(R, z, p)
    expo = np.exp(1j * _phase(phi, t, p))
    e_r = 1j * p.E0 * h * expo
    e_phi = -p.E0 * (1.0 + R / p.R0) * h * expo
    return np.stack(np.broadcast_arrays(e_r, e_phi, np.zeros_like(e_r)))


def b_phasor(R, phi, z, t, p: AnsatzParams) -> np.ndarray:
    """Complex B phasor: B_z = i*(E0/c)*e^{i psi}, other components zero."""
    h = mask(R, z, p)
    b_z = 1j * p.B0 * h * np.exp(1j * _phase(phi, t, p))
    zero = np.zeros_like(b_z)
    return np.stack(np.broadcast_arrays(zero, zero, b_z))


def real_fields(R, phi, z, t, p: AnsatzParams) -> tuple[np.ndarray, np.ndarray]:
    """Real instantaneous (E, B), each with component leading axis.

    E_R = -E0*sin(psi), E_phi = -E0*(1+R/R0)*cos(psi), B_z = -(E0/c)*sin(psi).
    """
    R = np.asarray(R, dtype=float)
    h = mask(R, z, p)
    psi = _phase(phi, t, p)
    e_r = -p.E0 * h * np.sin(psi)
    e_phi = -p.E0 * (1.0 + R / p.R0) * h * np.cos(psi)
    b_z = -p.B0 * h * np.sin(psi)
    E = np.stack(np.broadcast_arrays(e_r, e_phi, np.zeros_like(e_r)))
    B = np.stack(np.broadcast_arrays(np.zeros_like(b_z), np.zeros_like(b_z), b_z))
    return E, B


def charge_density(R, phi, z, t, p: AnsatzParams, k: PhysicalConstants = CODATA):
    """Geometric charge density eps0*div E = (eps0*E0/R0)*sin(psi) inside."""
    h = mask(R, z, p)
    return k.eps0 * p.E0 / p.R0 * h * np.sin(_phase(phi, t, p))


def current_density(R, phi, z, t, p: AnsatzParams, k: PhysicalConstants = CODATA) -> np.ndarray:
    """Current density defined by Ampere-Maxwell, J = curl B/mu0 - eps0*dE/dt.

    Closed forms inside the tube:
        J_R   = -eps0*E0*(c/R + omega)*cos(psi)
        J_phi =  eps0*E0*omega*(1 + R/R0)*sin(psi)
        J_z   = 0
    """
    R = np.asarray(R, dtype=float)
    h = mask(R, z, p)
    psi = _phase(phi, t, p)
    j_r = -k.eps0 * p.E0 * (k.c / R + p.omega) * h * np.cos(psi)
    j_phi = k.eps0 * p.E0 * p.omega * (1.0 + R / p.R0) * h * np.sin(psi)
    return np.stack(np.broadcast_arrays(j_r, j_phi, np.zeros_like(j_r)))


def poynting_instantaneous(R, phi, z, t, p: AnsatzParams,
                           k: PhysicalConstants = CODATA) -> np.ndarray:
    """Instantaneous Poynting vector S = (E x B)/mu0 from the real fields.

    Inside: S_R = eps0*c*E0^2*(1+R/R0)*sin(psi)*cos(psi),
            S_phi = -eps0*c*E0^2*sin^2(psi), S_z = 0.
    """
    E, B = real_fields(R, phi, z, t, p)
    # cross product in cylindrical components with B = (0, 0, B_z)
    s_r = E[1] * B[2] / k.mu0
    s_phi = -E[0] * B[2] / k.mu0
    return np.stack(np.broadcast_arrays(s_r, s_phi, np.zeros_like(s_r)))


def poynting_time_average(R, phi, z, p: AnsatzParams,
                          k: PhysicalConstants = CODATA) -> np.ndarray:
    """One-period time average of S: -(1/2)*eps0*c*E0^2 * a_phi inside."""
    h = mask(R, z, p)
    s_phi = -0.5 * k.eps0 * k.c * p.E0**2 * h
    return np.stack(np.broadcast_arrays(np.zeros_like(s_phi), s_phi, np.zeros_like(s_phi)))


def momentum_density_avg(R, phi, z, p: AnsatzParams,
                         k: PhysicalConstants = CODATA) -> np.ndarray:
    """Time-averaged electromagnetic momentum density S_avg/c^2."""
    return poynting_time_average(R, phi, z, p, k) / k.c**2


def energy_density_model(R, phi, z, p: AnsatzParams,
                         k: PhysicalConstants = CODATA):
    """The model's normative energy density eps0*E0^2*(1 + R/(4*R0)) inside.

    Time-independent; integrating it over the torus yields the model's
    total-energy closed form.  See :func:`energy_density_em` for the
    textbook-definition diagnostic, which does not coincide with this.
    """
    R = np.asarray(R, dtype=float)
    h = mask(R, z, p)
    return k.eps0 * p.E0**2 * (1.0 + R / (4.0 * p.R0)) * h


def energy_density_em(R, phi, z, t, p: AnsatzParams,
                      k: PhysicalConstants = CODATA):
    """Textbook instantaneous density (1/2)*eps0*|E|^2 + |B|^2/(2*mu0).

    Diagnostic only: its time average, (1/4)*eps0*E0^2*(2 + (1+R/R0)^2),
    differs from :func:`energy_density_model`; both are reported and
    neither is silently substituted for the other.
    """
    E, B = real_fields(R, phi, z, t, p)
    return 0.5 * k.eps0 * np.sum(E**2, axis=0) + np.sum(B**2, axis=0) / (2.0 * k.mu0)


def sample_phasor(R: float, phi: float, z: float, t: float,
                  p: AnsatzParams) -> ComplexFieldSample:
    """Phasor components at a single point, as a record."""
    E = e_phasor(R, phi, z, t, p)
    B = b_phasor(R, phi, z, t, p)
    return ComplexFieldSample(
        R=float(R), phi=float(phi), z=float(z), t=float(t),
        E_R=complex(E[0]), E_phi=complex(E[1]), E_z=complex(E[2]),
        B_R=complex(B[0]), B_phi=complex(B[1]), B_z=complex(B[2]),
    )


def sample_real(R: float, phi: float, z: float, t: float, p: AnsatzParams,
                k: PhysicalConstants = CODATA) -> RealFieldSample:
    """Real fields and every derived pointwise quantity at a single point."""
    E, B = real_fields(R, phi, z, t, p)
    J = current_density(R, phi, z, t, p, k)
    S = poynting_instantaneous(R, phi, z, t, p, k)
    return RealFieldSample(
        R=float(R), phi=float(phi), z=float(z), t=float(t),
        E=tuple(float(v) for v in E),
        B=tuple(float(v) for v in B),
        rho=float(charge_density(R, phi, z, t, p, k)),
        J=tuple(float(v) for v in J),
        S=tuple(float(v) for v in S),
        u=float(energy_density_model(R, phi, z, p, k)),
    )
