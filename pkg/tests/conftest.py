"""Shared fixtures: constants, solved parameter sets, and a default grid."""

import pytest

from toroidal_em.constants import codata_constants, derived_scales
from toroidal_em.geometry import build_grid
from toroidal_em.maxwell import SamplingConfig
from toroidal_em.solver import solve_full, solve_thin_torus


@pytest.fixture(scope="session")
def k():
    return codata_constants()


@pytest.fixture(scope="session")
def ds(k):
    return derived_scales(k)


@pytest.fixture(scope="session")
def thin(k):
    """Thin-torus closed-form solution with the Schwinger factor."""
    return solve_thin_torus(k, include_schwinger=True)


@pytest.fixture(scope="session")
def full(k):
    """Full-corrections Newton solution (electron targets)."""
    return solve_full(k)


@pytest.fixture(scope="session")
def params(full, k):
    """Faraday-consistent field parameters at the full solution."""
    return full.as_params(k)


@pytest.fixture(scope="session")
def grid(params):
    """Default-resolution quadrature grid over the solved torus."""
    return build_grid(params.geometry, (32, 64, 64))


@pytest.fixture()
def sampling():
    return SamplingConfig(n_points=1000, seed=42, h=1e-5)
