"""Volume-integral observables: closed forms vs quadrature, and targets."""

import numpy as np
import pytest

from toroidal_em.constants import PhysicalConstants, derived_scales
from toroidal_em.fields import AnsatzParams
from toroidal_em.geometry import TorusGeometry, build_grid
from toroidal_em.observables import (ValuePair, angular_momentum,
                                     compute_observables,
                                     magnetic_moment_closed,
                                     magnetic_moment_quadrature_diagnostic,
                                     phase_velocity, q_rms, total_energy)


class TestValuePair:
    def test_rel_difference(self):
        assert ValuePair(2.0, 2.0 + 2e-9).rel_difference == pytest.approx(1e-9)
        assert ValuePair(0.0, 0.0).rel_difference == 0.0
        assert ValuePair(0.0, 1.0).rel_difference == float("inf")


class TestChargeRms:
    def test_quadrature_matches_closed_form(self, params, grid, k):
        v = q_rms(params, grid, k)
        assert abs(v.rel_difference) < 1e-10

    def test_hits_elementary_charge(self, params, grid, k):
        v = q_rms(params, grid, k)
        assert abs(v.quadrature / k.e_charge - 1.0) < 1e-3

    def test_linear_in_amplitude(self, params, grid, k):
        doubled = AnsatzParams.faraday(2.0 * params.E0, params.R0, params.r0, k)
        v1 = q_rms(params, grid, k)
        v2 = q_rms(doubled, grid, k)
        assert v2.quadrature == pytest.approx(2.0 * v1.quadrature, rel=1e-14)


class TestMagneticMoment:
    def test_hits_anomalous_moment_target(self, params, k, ds):
        mu = magnetic_moment_closed(params, k)
        target = ds.mu_B * (1.0 + k.alpha / (2.0 * np.pi))
        assert abs(mu / target - 1.0) < 1e-3

    def test_thin_limit_drops_correction(self, k):
        p = AnsatzParams.faraday(1.0, 1.0, 1e-8, k)
        thin_form = np.sqrt(2.0) * k.eps0 * np.pi * k.c * p.E0 * p.R0 * p.r0**2
        assert magnetic_moment_closed(p, k) == pytest.approx(thin_form, rel=1e-15)

    def test_doubling_major_radius_slightly_less_than_doubles(self, k):
        # mu ~ R0*(1 + r0^2/(2 R0^2)): growing R0 weakens the correction term
        p1 = AnsatzParams.faraday(1.0, 1.0, 0.3, k)
        p2 = AnsatzParams.faraday(1.0, 2.0, 0.3, k)
        ratio = magnetic_moment_closed(p2, k) / magnetic_moment_closed(p1, k)
        assert 1.9 < ratio < 2.0

    def test_diagnostic_ratio_is_two_pi(self, params, grid, k):
        diag = magnetic_moment_quadrature_diagnostic(params, grid, k)
        assert np.isfinite(diag.value) and diag.value > 0.0
        assert abs(diag.ratio_to_closed / (2.0 * np.pi) - 1.0) < 1e-10

    def test_diagnostic_ratio_stable_across_resolutions(self, params, k):
        g = params.geometry
        lo = magnetic_moment_quadrature_diagnostic(params, build_grid(g, (16, 32, 32)), k)
        hi = magnetic_moment_quadrature_diagnostic(params, build_grid(g, (32, 64, 64)), k)
        assert abs(lo.value / hi.value - 1.0) < 1e-8

    def test_zero_amplitude_degenerate(self, k):
        p = AnsatzParams.faraday(0.0, 1.0, 0.3, k)
        diag = magnetic_moment_quadrature_diagnostic(p, build_grid(p.geometry, (8, 16, 16)), k)
        assert diag.value == 0.0
        assert np.isnan(diag.ratio_to_closed)


class TestAngularMomentum:
    def test_quadrature_matches_closed_form(self, params, grid, k):
        v = angular_momentum(params, grid, k)
        assert abs(v.rel_difference) < 1e-10

    def test_hits_half_hbar(self, params, grid, k):
        v = angular_momentum(params, grid, k)
        assert abs(v.quadrature / (0.5 * k.hbar) - 1.0) < 1e-3

    def test_quadratic_in_amplitude(self, params, grid, k):
        doubled = AnsatzParams.faraday(2.0 * params.E0, params.R0, params.r0, k)
        v1 = angular_momentum(params, grid, k)
        v2 = angular_momentum(doubled, grid, k)
        assert v2.quadrature == pytest.approx(4.0 * v1.quadrature, rel=1e-14)


class TestTotalEnergy:
    def test_quadrature_matches_closed_form(self, params, grid, k):
        v = total_energy(params, grid, k)
        assert abs(v.rel_difference) < 1e-10

    def test_near_imputed_mass_fraction(self, params, grid, k, ds):
        v = total_energy(params, grid, k)
        assert abs(v.quadrature / (0.795 * ds.rest_energy) - 1.0) < 5e-3

    def test_thin_limit_coefficient(self, k):
        # U -> (5/2) eps0 pi^2 R0 r0^2 E0^2 as r0/R0 -> 0
        p = AnsatzParams.faraday(1.0, 1.0, 1e-7, k)
        grid = build_grid(p.geometry, (8, 16, 16))
        v = total_energy(p, grid, k)
        lead = 2.5 * k.eps0 * np.pi**2 * p.R0 * p.r0**2 * p.E0**2
        assert v.closed_form == pytest.approx(lead, rel=1e-13)
        assert v.quadrature == pytest.approx(lead, rel=1e-12)


class TestPhaseVelocity:
    def test_exactly_twice_c_when_tuned(self, params, k):
        assert phase_velocity(params, k) == 2.0 * k.c

    def test_independent_of_radius(self, k):
        assert phase_velocity(AnsatzParams.faraday(1.0, 7.3, 0.5, k), k) == 2.0 * k.c

    def test_detuned_warns_and_returns_literal(self, k):
        p = AnsatzParams.with_omega(1.0, 2.0, 0.5, omega=k.c / 2.0, k=k)
        with pytest.warns(UserWarning):
            v = phase_velocity(p, k)
        assert v == k.c


class TestScalingLaws:
    def test_amplitude_power_laws(self, params, grid, k):
        base = compute_observables(params, grid, k)
        for m in (10.0 ** (1.0 / 3.0), 10.0 ** (2.0 / 3.0), 10.0):
            scaled = compute_observables(
                AnsatzParams.faraday(m * params.E0, params.R0, params.r0, k), grid, k)
            assert scaled.Q_rms.quadrature == pytest.approx(
                m * base.Q_rms.quadrature, rel=1e-12)
            assert scaled.mu_z.closed_form == pytest.approx(
                m * base.mu_z.closed_form, rel=1e-12)
            assert scaled.L_z.quadrature == pytest.approx(
                m**2 * base.L_z.quadrature, rel=1e-12)
            assert scaled.U.quadrature == pytest.approx(
                m**2 * base.U.quadrature, rel=1e-12)
            assert scaled.v_phase == base.v_phase


class TestGridIndependence:
    def test_doubling_resolution_changes_nothing(self, params, grid, k):
        fine = build_grid(params.geometry, (64, 128, 128))
        a = compute_observables(params, grid, k)
        b = compute_observables(params, fine, k)
        for name in ("Q_rms", "mu_z", "L_z", "U"):
            va = getattr(a, name).quadrature
            vb = getattr(b, name).quadrature
            assert abs(vb / va - 1.0) < 1e-8, name


class TestUnitScaleInvariance:
    def test_dimensionless_outputs_survive_unit_rescale(self, params, grid, k, ds):
        # stretch length and velocity units by 100; alpha and the
        # dimensionless observable ratios must not move
        lam = 100.0
        k2 = PhysicalConstants(
            c=k.c * lam, eps0=k.eps0 / lam**3, mu0=k.mu0 * lam,
            hbar=k.hbar * lam**2, e_charge=k.e_charge, m_e=k.m_e, alpha=k.alpha)
        ds2 = derived_scales(k2)
        assert ds2.r_c == pytest.approx(lam * ds.r_c, rel=1e-12)
        p2 = AnsatzParams.faraday(params.E0 * lam, params.R0 * lam,
                                  params.r0 * lam, k2)
        grid2 = build_grid(TorusGeometry(p2.R0, p2.r0), (32, 64, 64))
        a = compute_observables(params, grid, k)
        b = compute_observables(p2, grid2, k2)
        assert b.Q_rms.quadrature / k2.e_charge == pytest.approx(
            a.Q_rms.quadrature / k.e_charge, rel=1e-12)
        assert b.L_z.quadrature / k2.hbar == pytest.approx(
            a.L_z.quadrature / k.hbar, rel=1e-12)
        assert b.U.quadrature / ds2.rest_energy == pytest.approx(
            a.U.quadrature / ds.rest_energy, rel=1e-12)
        assert b.mu_z.closed_form / ds2.mu_B == pytest.approx(
            a.mu_z.closed_form / ds.mu_B, rel=1e-12)
        assert b.v_phase / k2.c == a.v_phase / k.c == 2.0


class TestObservableSet:
    def test_all_fields_populated(self, params, grid, k):
        obs = compute_observables(params, grid, k)
        for name in ("Q_rms", "mu_z", "L_z", "U"):
            pair = getattr(obs, name)
            assert np.isfinite(pair.closed_form) and np.isfinite(pair.quadrature)
            assert pair.closed_form > 0.0
        assert obs.v_phase == 2.0 * k.c
        assert obs.mu_quadrature_ratio == pytest.approx(2.0 * np.pi, rel=1e-10)
