import numpy as np
import pytest

from nslgrad.constants import (C_LIGHT, M_ELECTRON, cyclotron_frequency,
                               landau_width, tesla_to_gauss)
from nslgrad.dynamics import (InitialTransverseState, PacketQuantumNumbers,
                              breathing_params)
from nslgrad.fringe import (FringeScenario, TransitObservables,
                            adiabatic_check, fresnel_c, fresnel_c_quadrature,
                            transit_bracket, transit_observables)
from nslgrad.state import LongitudinalPacket

H_1T = tesla_to_gauss(1.0)
OMEGA_1T = abs(cyclotron_frequency(H_1T))


def default_inputs(sigma0=5e-4, sigma0_prime=0.0, p0_beta=0.1, sigma_z=2e-5):
    q = PacketQuantumNumbers(0, 5)
    bp = breathing_params(InitialTransverseState(sigma0, sigma0_prime), H_1T)
    pkt = LongitudinalPacket(p0=p0_beta * M_ELECTRON * C_LIGHT, sigma_z=sigma_z)
    return q, bp, pkt


def test_fresnel_c_values():
    assert fresnel_c(0.0) == 0.0
    assert fresnel_c(1.0) == pytest.approx(0.7798934, abs=1e-7)
    assert abs(fresnel_c(50.0) - 0.5) < 1e-2
    with pytest.raises(ValueError):
        fresnel_c(-0.5)


def test_fresnel_c_against_quadrature_oracle():
    for x in np.linspace(0.0, 10.0, 26):
        assert abs(fresnel_c(x) - fresnel_c_quadrature(x)) <= 1e-9


def test_fringe_scenario_geometry():
    fs = FringeScenario(d_diameter=1.0, omega_c_inner=OMEGA_1T)
    assert fs.t_transit == pytest.approx(2.0 / C_LIGHT, rel=1e-14)
    assert fs.t_transit == pytest.approx(67e-12, rel=0.01)
    assert fs.omega_c_rate == pytest.approx(OMEGA_1T / fs.t_transit, rel=1e-14)


def test_adiabatic_check_reference_setup():
    fs = FringeScenario(d_diameter=1.0, omega_c_inner=OMEGA_1T)
    ratio, flag = adiabatic_check(fs)
    assert ratio == pytest.approx(1.0 / (OMEGA_1T * fs.t_transit), rel=1e-12)
    assert flag  # 1 cm / 1 T ramp is adiabatic


def test_adiabatic_check_edges():
    assert adiabatic_check(FringeScenario(d_diameter=1.0, omega_c_inner=0.0)) == (0.0, True)
    # ratio exactly at the threshold fails the strict inequality
    d = 1.0
    fs = FringeScenario(d_diameter=d, omega_c_inner=5.0 * C_LIGHT / d)
    ratio, flag = adiabatic_check(fs)
    assert ratio == pytest.approx(0.1, rel=1e-14)
    assert not flag


def test_transit_observables_landau_all_zero():
    q, _, pkt = default_inputs()
    bp = breathing_params(InitialTransverseState(landau_width(H_1T), 0.0), H_1T)
    fs = FringeScenario(d_diameter=1.0, omega_c_inner=OMEGA_1T)
    obs = transit_observables(fs, q, bp, pkt, 100.0)
    assert obs.power_erg_s == 0.0
    assert obs.dL_int_erg == 0.0
    assert obs.dL_p0_erg == 0.0
    assert obs.dL_rad_erg == 0.0


def test_p0_term_isolation():
    q, bp, pkt = default_inputs(p0_beta=0.2)
    fs = FringeScenario(d_diameter=1.0, omega_c_inner=OMEGA_1T)
    with_p0 = transit_observables(fs, q, bp, pkt, 100.0)
    no_p0 = transit_observables(fs, q, bp, LongitudinalPacket(0.0, pkt.sigma_z), 100.0)
    assert with_p0.dL_p0_erg != 0.0
    assert no_p0.dL_p0_erg == 0.0
    assert no_p0.power_erg_s == with_p0.power_erg_s
    assert no_p0.dL_rad_erg == with_p0.dL_rad_erg
    assert no_p0.dL_int_erg == with_p0.dL_int_erg  # p0 enters only its own term


def test_radiative_term_linear_in_radius():
    q, bp, pkt = default_inputs()
    fs = FringeScenario(d_diameter=1.0, omega_c_inner=OMEGA_1T)
    base = transit_observables(fs, q, bp, pkt, 1.0)
    for radius in (10.0, 100.0):
        scaled = transit_observables(fs, q, bp, pkt, radius)
        assert scaled.dL_rad_erg == pytest.approx(radius * base.dL_rad_erg, rel=1e-12)
        assert scaled.power_erg_s == base.power_erg_s


def test_bracket_shared_between_power_and_interference():
    q, bp, pkt = default_inputs(sigma0=1e-3, sigma0_prime=2e-4 * C_LIGHT)
    fs = FringeScenario(d_diameter=1.5, omega_c_inner=OMEGA_1T)
    obs = transit_observables(fs, q, bp, pkt, 50.0)
    assert isinstance(obs, TransitObservables)
    w = fs.omega_c_inner * fs.t_transit
    assert obs.omega_c_t == pytest.approx(w, rel=1e-14)
    assert obs.bracket == pytest.approx(transit_bracket(w, bp.s_sign), rel=1e-14)
    # reconstruct the transit power from the shared bracket
    from nslgrad.constants import E_CHARGE
    g = q.degeneracy
    dsig4 = bp.sigma_st**4 - bp.sigma_L**4
    expected = (g**2 * fs.omega_c_inner**2 * E_CHARGE**2
                / (12.0 * fs.t_transit**2 * C_LIGHT**5) * dsig4 * obs.bracket)
    assert obs.power_erg_s == pytest.approx(expected, rel=1e-14)
    assert obs.fresnel_value == pytest.approx(fresnel_c(obs.fresnel_arg), rel=1e-14)


def test_transit_domain_errors():
    q, bp, pkt = default_inputs()
    with pytest.raises(ValueError):
        transit_observables(FringeScenario(1.0, -OMEGA_1T), q, bp, pkt, 1.0)
    with pytest.raises(ValueError):
        # omega_c * T below the evaluated range
        tiny = 1e-4 / (2.0 / C_LIGHT)
        transit_observables(FringeScenario(1.0, tiny), q, bp, pkt, 1.0)


def test_transit_continuous_in_omega_t():
    q, bp, pkt = default_inputs(sigma0=1e-3)
    values = []
    w_grid = np.linspace(1e-3, 50.0, 400)
    for w in w_grid:
        omega = w / (2.0 / C_LIGHT)
        obs = transit_observables(FringeScenario(1.0, omega), q, bp, pkt, 10.0)
        values.append([obs.power_erg_s, obs.dL_int_erg, obs.dL_p0_erg, obs.dL_rad_erg])
    values = np.array(values)
    assert np.all(np.isfinite(values))


def test_asymmetric_sign_coefficient():
    # the (s - 3)/8 coefficient is deliberately not symmetric in s
    assert transit_bracket(5.0, 1) - transit_bracket(5.0, -1) == pytest.approx(
        0.25 * np.cos(10.0), rel=1e-12)
