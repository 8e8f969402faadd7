"""Torus geometry, coordinate transforms, and volume quadrature grids.

Coordinates: a point inside the torus tube is (r, theta, phi) with
r the distance from the tube centreline, theta the poloidal angle and
phi the azimuthal angle around the symmetry axis.  The cylindrical image
is R = R0 + r*cos(theta), z = r*sin(theta), phi unchanged.  The volume
element is dV = r*(R0 + r*cos(theta)) dr dtheta dphi.

Quadrature: Gauss-Legendre nodes in r on [0, r0] combined with uniform
(rectangle-rule) nodes in the two periodic angles.  The rectangle rule is
spectrally accurate for smooth periodic integrands, so the torus volume
and the R-moment integrals used by the observables come out exact to
machine precision at the default resolution.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class TorusGeometry:
    """Torus with major radius R0 and tube (minor) radius r0, in metres."""

    R0: float
    r0: float

    def __post_init__(self) -> None:
        if not (0.0 < self.r0 < self.R0):
            raise ValueError(
                f"need 0 < r0 < R0 for a proper torus, got r0={self.r0}, R0={self.R0}"
            )

    @property
    def volume(self) -> float:
        """Exact tube volume 2*pi^2*R0*r0^2."""
        return 2.0 * np.pi**2 * self.R0 * self.r0**2


@dataclass(frozen=True)
class ToroidalPoint:
    """Single point in toroidal coordinates (r >= 0, angles in radians)."""

    r: float
    theta: float
    phi: float


def toroidal_to_cylindrical(r, theta, phi, g: TorusGeometry):
    """Map toroidal coordinates to cylindrical (R, phi, z).

    Accepts scalars or broadcastable arrays.
    """
    r = np.asarray(r, dtype=float)
    if np.any(r < 0.0):
        raise ValueError("minor-radial coordinate r must be >= 0")
    R = g.R0 + r * np.cos(theta)
    z = r * np.sin(theta)
    return R, np.asarray(phi, dtype=float), z


def inside_torus(R, z, g: TorusGeometry):
    """True strictly inside the tube: (R - R0)^2 + z^2 < r0^2.

    The boundary itself counts as outside, so the field mask is a strict
    inequality and every quantity vanishes exactly at r = r0.
    """
    R = np.asarray(R, dtype=float)
    z = np.asarray(z, dtype=float)
    return (R - g.R0) ** 2 + z**2 < g.r0**2


def jacobian(r, theta, g: TorusGeometry):
    """Volume-element factor r*(R0 + r*cos(theta)); dV = jacobian dr dtheta dphi."""
    r = np.asarray(r, dtype=float)
    return r * (g.R0 + r * np.cos(theta))


@dataclass(frozen=True)
class QuadratureGrid:
    """Flattened tensor-product quadrature nodes over the torus volume.

    ``weights`` already include the Jacobian, so integrals are plain
    weighted sums of point values.  Cylindrical node coordinates are
    precomputed since most integrands are written in (R, phi, z).
    """

    geometry: TorusGeometry
    resolution: tuple[int, int, int]
    r: np.ndarray = field(repr=False)
    theta: np.ndarray = field(repr=False)
    phi: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)
    R: np.ndarray = field(repr=False)
    z: np.ndarray = field(repr=False)

    @property
    def n_nodes(self) -> int:
        return self.weights.size


def build_grid(g: TorusGeometry, resolution: tuple[int, int, int] = (32, 64, 64)) -> QuadratureGrid:
    """Build a (n_r, n_theta, n_phi) quadrature grid over the torus.

    Gauss-Legendre in r keeps every node strictly inside 0 < r < r0,
    which sidesteps both the Jacobian zero at the axis and the boundary
    convention at r = r0.
    """
    n_r, n_theta, n_phi = resolution
    if min(n_r, n_theta, n_phi) < 4:
        raise ValueError(f"resolution counts must be >= 4, got {resolution}")

    x, w = np.polynomial.legendre.leggauss(n_r)
    r_nodes = 0.5 * g.r0 * (x + 1.0)
    r_weights = 0.5 * g.r0 * w
    theta_nodes = 2.0 * np.pi * np.arange(n_theta) / n_theta
    phi_nodes = 2.0 * np.pi * np.arange(n_phi) / n_phi

    r3, t3, p3 = np.meshgrid(r_nodes, theta_nodes, phi_nodes, indexing="ij")
    w3 = (
        r_weights[:, None, None]
        * (2.0 * np.pi / n_theta)
        * (2.0 * np.pi / n_phi)
        * jacobian(r3, t3, g)
    )
    R3, _, z3 = toroidal_to_cylindrical(r3, t3, p3, g)
    return QuadratureGrid(
        geometry=g,
        resolution=(n_r, n_theta, n_phi),
        r=r3.ravel(),
        theta=t3.ravel(),
        phi=p3.ravel(),
        weights=w3.ravel(),
        R=R3.ravel(),
        z=z3.ravel(),
    )


def integrate(f, grid: QuadratureGrid) -> float:
    """Integrate over the torus volume.

    ``f`` may be a callable f(r, theta, phi) evaluated at the grid nodes,
    or an array of node values (constant scalars are broadcast).  Raises
    ValueError if any evaluated value is non-finite.
    """
    if callable(f):
        values = np.asarray(f(grid.r, grid.theta, grid.phi), dtype=float)
    else:
        values = np.asarray(f, dtype=float)
    values = np.broadcast_to(values, grid.weights.shape)
    if not np.all(np.isfinite(values)):
        raise ValueError("integrand produced non-finite values on the grid")
    return float(np.dot(grid.weights, values))
