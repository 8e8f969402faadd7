"""Field evaluators: phasors, real fields, and derived pointwise quantities."""

import dataclasses

import numpy as np
import pytest

from toroidal_em.constants import CODATA
from toroidal_em.fields import (AnsatzParams, b_phasor, charge_density,
                                current_density, e_phasor,
                                energy_density_em, energy_density_model, mask,
                                momentum_density_avg, poynting_instantaneous,
                                poynting_time_average, real_fields,
                                sample_phasor, sample_real)
from toroidal_em.geometry import toroidal_to_cylindrical

# round-number configuration for hand checks; omega = 2c/R0 = c
P = AnsatzParams.faraday(E0=1.0, R0=2.0, r0=0.5)


def interior_points(p, n, seed=0):
    rng = np.random.default_rng(seed)
    s = 0.95 * p.r0 * np.sqrt(rng.uniform(size=n))
    theta = rng.uniform(0.0, 2.0 * np.pi, size=n)
    phi = rng.uniform(0.0, 2.0 * np.pi, size=n)
    t = rng.uniform(0.0, 2.0 * np.pi / p.omega, size=n)
    R, _, z = toroidal_to_cylindrical(s, theta, phi, p.geometry)
    return R, phi, z, t


class TestParams:
    def test_faraday_constructor(self):
        assert abs(P.omega * P.R0 / (2.0 * CODATA.c) - 1.0) < 1e-15
        assert P.is_faraday()

    def test_b0_locked_to_e0(self):
        assert abs(P.B0 * CODATA.c / P.E0 - 1.0) < 1e-12

    def test_free_omega_constructor(self):
        q = AnsatzParams.with_omega(1.0, 2.0, 0.5, omega=1.0)
        assert q.omega == 1.0
        assert not q.is_faraday()

    def test_validation(self):
        with pytest.raises(ValueError):
            AnsatzParams.faraday(-1.0, 2.0, 0.5)
        with pytest.raises(ValueError):
            AnsatzParams.faraday(1.0, 2.0, 2.5)
        with pytest.raises(ValueError):
            AnsatzParams.with_omega(1.0, 2.0, 0.5, omega=-1.0)


class TestPhasors:
    def test_e_on_axis_circle(self):
        E = e_phasor(P.R0, 0.0, 0.0, 0.0, P)
        np.testing.assert_allclose(E[0], 1j * P.E0, atol=1e-15)
        np.testing.assert_allclose(E[1], -2.0 * P.E0, atol=1e-15)
        assert E[2] == 0.0

    def test_e_quarter_phase(self):
        E = e_phasor(P.R0, np.pi / 2.0, 0.0, 0.0, P)
        np.testing.assert_allclose(E[0], -P.E0 + 0j, atol=1e-15)
        np.testing.assert_allclose(E[1], -2.0 * P.E0 * 1j, atol=1e-15)

    def test_b_on_axis_circle(self):
        B = b_phasor(P.R0, 0.0, 0.0, 0.0, P)
        np.testing.assert_allclose(B[2], 1j * P.E0 / CODATA.c, rtol=1e-12)
        assert B[0] == 0.0 and B[1] == 0.0

    def test_b_corotating_phase_cancels(self):
        for t in (0.0, 1.7e-9, 4.2e-9):
            B = b_phasor(P.R0, P.omega * t, 0.0, t, P)
            np.testing.assert_allclose(B[2], 1j * P.B0, rtol=1e-9)

    def test_outside_zero(self):
        E = e_phasor(P.R0 + 2.0 * P.r0, 0.3, 0.0, 0.0, P)
        B = b_phasor(P.R0 + 2.0 * P.r0, 0.3, 0.0, 0.0, P)
        assert np.all(E == 0.0) and np.all(B == 0.0)


class TestMask:
    def test_zero_outside_everywhere(self):
        # points covering outside-tube radii, including the boundary itself
        rng = np.random.default_rng(3)
        n = 10_000
        s = P.r0 * (1.0 + 2.0 * rng.uniform(size=n))
        theta = rng.uniform(0.0, 2.0 * np.pi, size=n)
        s[0], theta[0] = P.r0, 0.0  # exact boundary point counts as outside
        phi = rng.uniform(0.0, 2.0 * np.pi, size=n)
        t = rng.uniform(0.0, 1e-8, size=n)
        R = P.R0 + s * np.cos(theta)
        z = s * np.sin(theta)
        assert np.all(mask(R, z, P) == 0.0)
        E, B = real_fields(R, phi, z, t, P)
        assert np.all(E == 0.0) and np.all(B == 0.0)
        assert np.all(charge_density(R, phi, z, t, P) == 0.0)
        assert np.all(current_density(R, phi, z, t, P) == 0.0)
        assert np.all(poynting_instantaneous(R, phi, z, t, P) == 0.0)
        assert np.all(energy_density_model(R, phi, z, P) == 0.0)
        assert np.all(energy_density_em(R, phi, z, t, P) == 0.0)


class TestRealFields:
    def test_matches_phasor_real_part(self):
        R, phi, z, t = interior_points(P, 1000, seed=11)
        E, B = real_fields(R, phi, z, t, P)
        Ec = e_phasor(R, phi, z, t, P)
        Bc = b_phasor(R, phi, z, t, P)
        np.testing.assert_allclose(E, Ec.real, rtol=1e-14, atol=1e-14 * P.E0)
        np.testing.assert_allclose(B, Bc.real, rtol=1e-14, atol=1e-14 * P.B0)

    def test_phase_zero(self):
        E, B = real_fields(P.R0, 0.0, 0.0, 0.0, P)
        np.testing.assert_allclose(E[0], 0.0, atol=1e-15)
        np.testing.assert_allclose(E[1], -2.0 * P.E0, rtol=1e-15)
        np.testing.assert_allclose(B[2], 0.0, atol=1e-15)

    def test_quarter_phase(self):
        E, B = real_fields(P.R0, np.pi / 2.0, 0.0, 0.0, P)
        np.testing.assert_allclose(E[0], -P.E0, rtol=1e-15)
        np.testing.assert_allclose(E[1], 0.0, atol=1e-12 * P.E0)
        np.testing.assert_allclose(B[2], -P.B0, rtol=1e-15)

    def test_e_r_squared_time_average(self):
        # uniform sampling over one period integrates trig polynomials exactly
        t = np.arange(64) / 64.0 * (2.0 * np.pi / P.omega)
        E, _ = real_fields(P.R0, 0.7, 0.0, t, P)
        np.testing.assert_allclose(np.mean(E[0] ** 2), P.E0**2 / 2.0, rtol=1e-12)


class TestChargeDensity:
    def test_phase_zero(self):
        assert charge_density(P.R0, 0.0, 0.0, 0.0, P) == 0.0

    def test_quarter_phase_amplitude(self):
        rho = charge_density(P.R0, np.pi / 2.0, 0.0, 0.0, P)
        np.testing.assert_allclose(rho, CODATA.eps0 * P.E0 / P.R0, rtol=1e-15)

    def test_integrates_to_zero_over_torus(self, params, grid, k):
        rho0 = k.eps0 * params.E0 / params.R0
        for t in (0.0, 3.3e-22):
            total = np.dot(grid.weights,
                           charge_density(grid.R, grid.phi, grid.z, t, params, k))
            assert abs(total) < 1e-12 * rho0 * grid.geometry.volume


class TestCurrentDensity:
    def test_radial_component_vanishes_at_quarter_phase(self):
        J = current_density(P.R0 + 0.1, np.pi / 2.0, 0.0, 0.0, P)
        np.testing.assert_allclose(J[0], 0.0, atol=1e-18)
        assert J[2] == 0.0

    def test_matches_ampere_maxwell_definition(self):
        # J must equal curl B/mu0 - eps0*dE/dt evaluated by finite differences
        from toroidal_em.maxwell import fd_curl_cylindrical

        R, phi, z, t = interior_points(P, 100, seed=21)
        h = 1e-6
        curlB = fd_curl_cylindrical(
            lambda R_, phi_, z_: real_fields(R_, phi_, z_, t, P)[1],
            R, phi, z, h, scale=P.R0)
        dt = h / P.omega
        dEdt = (real_fields(R, phi, z, t + dt, P)[0]
                - real_fields(R, phi, z, t - dt, P)[0]) / (2.0 * dt)
        J_def = curlB / CODATA.mu0 - CODATA.eps0 * dEdt
        J = current_density(R, phi, z, t, P)
        scale = np.max(np.linalg.norm(J, axis=0))
        np.testing.assert_allclose(J, J_def, atol=1e-6 * scale)

    def test_divergence_closed_form(self):
        from toroidal_em.maxwell import fd_div_cylindrical

        R, phi, z, t = interior_points(P, 100, seed=22)
        div = fd_div_cylindrical(
            lambda R_, phi_, z_: current_density(R_, phi_, z_, t, P),
            R, phi, z, 1e-5, scale=P.R0)
        expected = CODATA.eps0 * P.omega * P.E0 / P.R0 * np.cos(phi - P.omega * t)
        scale = CODATA.eps0 * P.omega * P.E0 / P.R0
        np.testing.assert_allclose(div, expected, atol=1e-6 * scale)


class TestPoynting:
    def test_zero_at_phase_zero(self):
        S = poynting_instantaneous(P.R0, 0.0, 0.0, 0.0, P)
        assert np.all(S == 0.0)  # B vanishes at this phase

    def test_closed_form_components(self):
        R, phi, z, t = interior_points(P, 200, seed=31)
        S = poynting_instantaneous(R, phi, z, t, P)
        psi = phi - P.omega * t
        pref = CODATA.eps0 * CODATA.c * P.E0**2
        np.testing.assert_allclose(
            S[0], pref * (1.0 + R / P.R0) * np.sin(psi) * np.cos(psi),
            rtol=1e-10, atol=1e-12 * pref)
        np.testing.assert_allclose(S[1], -pref * np.sin(psi) ** 2,
                                   rtol=1e-10, atol=1e-12 * pref)
        assert np.all(S[2] == 0.0)

    def test_time_average(self):
        R, phi, z, _ = interior_points(P, 50, seed=32)
        t = np.arange(64) / 64.0 * (2.0 * np.pi / P.omega)
        S_num = np.mean(
            [poynting_instantaneous(R, phi, z, ti, P) for ti in t], axis=0)
        S_avg = poynting_time_average(R, phi, z, P)
        np.testing.assert_allclose(S_num, S_avg, rtol=1e-10,
                                   atol=1e-12 * CODATA.eps0 * CODATA.c * P.E0**2)

    def test_momentum_density(self):
        R, phi, z, _ = interior_points(P, 50, seed=33)
        p_mom = momentum_density_avg(R, phi, z, P)
        np.testing.assert_allclose(p_mom[1], -0.5 * CODATA.eps0 * P.E0**2 / CODATA.c,
                                   rtol=1e-12)
        S_avg = poynting_time_average(R, phi, z, P)
        np.testing.assert_allclose(
            np.linalg.norm(p_mom, axis=0) * CODATA.c**2,
            np.linalg.norm(S_avg, axis=0), rtol=1e-12)


class TestEnergyDensity:
    def test_model_on_axis_circle(self):
        u = energy_density_model(P.R0, 0.0, 0.0, P)
        np.testing.assert_allclose(u, 1.25 * CODATA.eps0 * P.E0**2, rtol=1e-15)

    def test_model_linear_in_radius(self):
        hi = energy_density_model(P.R0 + P.r0 * 0.999999, 0.0, 0.0, P)
        lo = energy_density_model(P.R0 - P.r0 * 0.999999, 0.0, 0.0, P)
        np.testing.assert_allclose(
            hi - lo, CODATA.eps0 * P.E0**2 * 0.999999 * P.r0 / (2.0 * P.R0),
            rtol=1e-9)

    def test_model_volume_integral(self, params, grid, k):
        quad = np.dot(grid.weights,
                      energy_density_model(grid.R, grid.phi, grid.z, params, k))
        closed = (k.eps0 * np.pi**2 * params.R0 * params.r0**2 * params.E0**2
                  * (2.5 + params.r0**2 / (8.0 * params.R0**2)))
        np.testing.assert_allclose(quad, closed, rtol=1e-10)

    def test_em_convention_at_phase_zero(self):
        u = energy_density_em(P.R0, 0.0, 0.0, 0.0, P)
        np.testing.assert_allclose(u, 2.0 * CODATA.eps0 * P.E0**2, rtol=1e-12)

    def test_em_convention_time_average(self):
        # the textbook density does NOT average to the model's closed form
        t = np.arange(64) / 64.0 * (2.0 * np.pi / P.omega)
        R = P.R0 + 0.3 * P.r0
        u_avg = np.mean(energy_density_em(R, 0.4, 0.0, t, P))
        expected = 0.25 * CODATA.eps0 * P.E0**2 * (2.0 + (1.0 + R / P.R0) ** 2)
        np.testing.assert_allclose(u_avg, expected, rtol=1e-12)
        at_axis = np.mean(energy_density_em(P.R0, 0.4, 0.0, t, P))
        np.testing.assert_allclose(at_axis, 1.5 * CODATA.eps0 * P.E0**2, rtol=1e-12)
        assert not np.isclose(u_avg, float(energy_density_model(R, 0.4, 0.0, P)),
                              rtol=1e-2, atol=0.0)


class TestSamples:
    def test_real_record(self):
        s = sample_real(P.R0, 0.25, 0.1, 0.0, P)
        E, B = real_fields(s.R, s.phi, s.z, s.t, P)
        assert s.E == tuple(float(v) for v in E)
        assert s.B == tuple(float(v) for v in B)
        assert s.u == float(energy_density_model(s.R, s.phi, s.z, P))

    def test_phasor_record_structure(self):
        s = sample_phasor(P.R0, 0.25, 0.1, 0.0, P)
        assert s.E_z == 0.0 and s.B_R == 0.0 and s.B_phi == 0.0

    def test_scaled_params_replace(self):
        q = dataclasses.replace(P, E0=7.0 * P.E0, B0=7.0 * P.B0)
        E, _ = real_fields(P.R0, 0.3, 0.0, 0.0, q)
        E1, _ = real_fields(P.R0, 0.3, 0.0, 0.0, P)
        np.testing.assert_allclose(E, 7.0 * E1, rtol=1e-15)
