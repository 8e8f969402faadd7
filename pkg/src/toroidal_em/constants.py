"""Physical constants (CODATA 2018) and derived electron reference scales.

Every other module compares its outputs against the scales defined here:
the reduced Compton wavelength, the Schwinger critical field, the Bohr
magneton, the Dirac (zitterbewegung) frequency, and the electron rest
energy.  Values are hard-coded rather than fetched so that results are
reproducible regardless of environment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# =====================================================================
# CODATA 2018 values
# =====================================================================
SPEED_OF_LIGHT = 2.99792458e8        # m/s (exact)
VACUUM_PERMEABILITY = 1.25663706212e-6   # H/m
VACUUM_PERMITTIVITY = 8.8541878128e-12   # F/m
REDUCED_PLANCK = 1.054571817e-34     # J s
ELEMENTARY_CHARGE = 1.602176634e-19  # C (exact)
ELECTRON_MASS = 9.1093837015e-31     # kg
FINE_STRUCTURE = 7.2973525693e-3     # dimensionless


@dataclass(frozen=True)
class PhysicalConstants:
    """SI electromagnetic constants used throughout the workbench."""

    c: float        # speed of light [m/s]
    eps0: float     # vacuum permittivity [F/m]
    mu0: float      # vacuum permeability [H/m]
    hbar: float     # reduced Planck constant [J s]
    e_charge: float  # elementary charge magnitude [C]
    m_e: float      # electron mass [kg]
    alpha: float    # fine-structure constant

    def alpha_recomputed(self) -> float:
        """e^2/(4*pi*eps0*hbar*c); guards against transcription errors."""
        return self.e_charge**2 / (4.0 * math.pi * self.eps0 * self.hbar * self.c)


@dataclass(frozen=True)
class DerivedScales:
    """Electron reference scales derived from :class:`PhysicalConstants`."""

    r_c: float          # reduced Compton wavelength hbar/(m_e c) [m]
    E_S: float          # Schwinger critical field m_e^2 c^3/(e hbar) [V/m]
    mu_B: float         # Bohr magneton e hbar/(2 m_e) [A m^2]
    omega_D: float      # Dirac frequency 2 m_e c^2 / hbar [rad/s]
    rest_energy: float  # m_e c^2 [J]


def codata_constants() -> PhysicalConstants:
    """Return the fixed CODATA 2018 constant set."""
    return PhysicalConstants(
        c=SPEED_OF_LIGHT,
        eps0=VACUUM_PERMITTIVITY,
        mu0=VACUUM_PERMEABILITY,
        hbar=REDUCED_PLANCK,
        e_charge=ELEMENTARY_CHARGE,
        m_e=ELECTRON_MASS,
        alpha=FINE_STRUCTURE,
    )


def derived_scales(k: PhysicalConstants) -> DerivedScales:
    """Compute the five derived scales from a constant set."""
    return DerivedScales(
        r_c=k.hbar / (k.m_e * k.c),
        E_S=k.m_e**2 * k.c**3 / (k.e_charge * k.hbar),
        mu_B=k.e_charge * k.hbar / (2.0 * k.m_e),
        omega_D=2.0 * k.m_e * k.c**2 / k.hbar,
        rest_energy=k.m_e * k.c**2,
    )


# Shared default instance; pass an explicit PhysicalConstants to any
# function that accepts `k` to work in a rescaled unit system instead.
CODATA = codata_constants()
