"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Criterion 7 contains two checks that fail by design: the quoted OAM
sweep magnitudes (1e-14..1e-1 hbar/s, total ~1e-7 hbar over a 1 km
flight, quantum-loss times >= 1e3 s) are mutually inconsistent with the
closed-form rate formula by ~8-9 orders, while that same formula is
pinned to the brute-force oracle at 1e-8 by criteria 1-3 and matches
the quoted power-side numbers.  The checks are asserted as quoted and
left red rather than weakened; see the decisions ledger.
"""

import time

import numpy as np
import pytest
from scipy.integrate import quad as scipy_quad

from nslgrad.cli import main
from nslgrad.constants import (C_LIGHT, HBAR, cyclotron_frequency, erg_to_ev,
                               landau_width, tesla_to_gauss)
from nslgrad.dynamics import (InitialTransverseState, PacketQuantumNumbers,
                              breathing_params, sigma_sq)
from nslgrad.fringe import (FringeScenario, fresnel_c, fresnel_c_quadrature,
                            transit_observables)
from nslgrad.observables import (ANGULAR_SHAPE_SOLID_ANGLE, Scenario,
                                 avg_oam_rate, avg_power, flight_report,
                                 transverse_energy)
from nslgrad.oracle import numeric_avg_oam_rate, numeric_avg_power
from nslgrad.sources import (continuity_residual, current_density,
                             transverse_density)
from nslgrad.state import LongitudinalPacket, make_state
from nslgrad.sweeps import SweepSpec, sweep_rows
from nslgrad.verify import sample_state, scaling_slopes
from nslgrad.config import resolve

H_1T = tesla_to_gauss(1.0)
E_CHARGE = -4.80320471257e-10


def _criterion(cid, description, ok):
    print(f"[criterion {cid:>3}] {'PASS' if ok else 'FAIL'} - {description}")
    return ok


@pytest.fixture(scope="module")
def oracle_cases():
    """20 randomized closed-form-vs-oracle comparisons, timed."""
    rng = np.random.default_rng(2024)
    cases = []
    start = time.monotonic()
    for _ in range(20):
        state, h_tesla, sigma0 = sample_state(rng)
        q, bp = state.quantum, state.breathing
        p_closed = avg_power(q, bp)
        p_numeric = numeric_avg_power(state)
        oam = numeric_avg_oam_rate(state)
        r_closed = avg_oam_rate(q, bp)
        cases.append({
            "power_rel": abs(p_numeric - p_closed) / p_closed,
            "power_alt_rel": abs(p_numeric - ANGULAR_SHAPE_SOLID_ANGLE * p_closed)
            / (ANGULAR_SHAPE_SOLID_ANGLE * p_closed),
            "oam_rel": abs(oam["interference_z"] - r_closed) / abs(r_closed),
            "far_frac": abs(oam["far_z_average"]) / oam["far_z_amplitude"],
            "ratio_err": abs(p_closed / r_closed - 3.0 * bp.omega_c) / abs(3.0 * bp.omega_c),
            "slopes": scaling_slopes(state),
        })
    return cases, time.monotonic() - start


def test_criterion_1_power_oracle(oracle_cases):
    cases, elapsed = oracle_cases
    worst = max(c["power_rel"] for c in cases)
    matches_primary = all(c["power_rel"] <= 1e-8 for c in cases)
    matches_alt = any(c["power_alt_rel"] <= 1e-8 for c in cases)
    ok = matches_primary and not matches_alt and elapsed < 10.0
    assert _criterion(1, f"oracle power vs closed form, 20 cases, worst rel "
                         f"{worst:.2e}, adjudicated to the compact form, "
                         f"{elapsed:.1f} s", ok)


def test_criterion_2_oam_oracle(oracle_cases):
    cases, _ = oracle_cases
    worst = max(c["oam_rel"] for c in cases)
    worst_far = max(c["far_frac"] for c in cases)
    ok = worst <= 1e-8 and worst_far <= 1e-9
    assert _criterion(2, f"oracle OAM vs closed form, worst rel {worst:.2e}, "
                         f"far-term average {worst_far:.2e} of amplitude", ok)


def test_criterion_3_ratio_identity(oracle_cases):
    cases, _ = oracle_cases
    worst = max(c["ratio_err"] for c in cases)
    ok = worst <= 1e-12
    assert _criterion(3, f"<P>/<dLz/dt> = 3*omega_c, worst rel {worst:.2e}", ok)


def test_criterion_4_continuity():
    state = make_state(1, 5, 8e-5, 1.3e-4 * C_LIGHT, H_1T,
                       p0=0.15 * 9.1093837015e-28 * C_LIGHT, sigma_z=2e-5)
    rng = np.random.default_rng(404)
    worst = 0.0
    for t in rng.uniform(0.0, state.breathing.period, 3):
        worst = max(worst, continuity_residual(state, t, n_grid=64))
    ok = worst < 1e-6
    assert _criterion(4, f"continuity residual on 64^3 grid at 3 times, "
                         f"worst {worst:.2e} of max|drho/dt|", ok)


def test_criterion_5_normalizations():
    state = make_state(2, -6, 6e-5, -2e-4 * C_LIGHT, H_1T, sigma_z=3e-5)
    q, bp = state.quantum, state.breathing
    rng = np.random.default_rng(505)
    worst_charge, worst_moment = 0.0, 0.0
    for t in rng.uniform(0.0, bp.period, 3):
        sig = float(np.sqrt(sigma_sq(t, bp)))
        r_max = (np.sqrt(q.degeneracy) + 14) * sig
        total, _ = scipy_quad(lambda r: 2 * np.pi * r * transverse_density(r, t, q, bp),
                              0.0, r_max, limit=500)
        worst_charge = max(worst_charge, abs(total - 1.0))
        moment, _ = scipy_quad(lambda r: 2 * np.pi * r**3 * transverse_density(r, t, q, bp),
                               0.0, r_max, limit=500)
        expected = q.degeneracy * float(sigma_sq(t, bp))
        worst_moment = max(worst_moment, abs(moment - expected) / expected)
    ok = worst_charge <= 1e-8 and worst_moment <= 1e-8
    assert _criterion(5, f"charge normalization err {worst_charge:.2e}, "
                         f"second moment err {worst_moment:.2e}", ok)


def test_criterion_6_scaling_slopes(oracle_cases):
    cases, _ = oracle_cases
    worst_far = max(abs(c["slopes"][0] + 2.0) for c in cases)
    worst_int = max(abs(c["slopes"][1] + 3.0) for c in cases)
    worst_oam = max(abs(c["slopes"][2] - 1.0) for c in cases)
    ok = worst_far <= 1e-3 and worst_int <= 1e-3 and worst_oam <= 1e-3
    assert _criterion(6, f"R-scaling slopes far/int/oam-far deviate "
                         f"{worst_far:.1e}/{worst_int:.1e}/{worst_oam:.1e}", ok)


@pytest.fixture(scope="module")
def reference_sweeps():
    """The three figure-style sweeps over sigma0 in [1 nm, 0.9 mm], timed."""
    spec = SweepSpec(sigma0_min_nm=1.0, sigma0_max_nm=9.0e5, points=300, scale="log")
    start = time.monotonic()
    power_cfg = resolve(flag_values={"preset": "tem", "n": 0, "l": 10,
                                     "sigma0_prime_over_c": -3.1e-4})
    oam_cfg = resolve(flag_values={"preset": "tem", "n": 0, "l": 10,
                                   "sigma0_prime_over_c": 0.0})
    linac_cfg = resolve(flag_values={"preset": "linac-1km", "n": 0, "l": 10,
                                     "sigma0_prime_over_c": -3.1e-4})
    sweeps = {
        "power": sweep_rows(power_cfg, spec),
        "oam": sweep_rows(oam_cfg, spec),
        "linac": sweep_rows(linac_cfg, spec),
    }
    return sweeps, time.monotonic() - start


def test_criterion_7_energy_side_numbers(reference_sweeps):
    sweeps, elapsed = reference_sweeps
    factor = 3.0

    tem_total = max(r["total_energy_ev"] for r in sweeps["power"])
    linac_total = max(r["total_energy_ev"] for r in sweeps["linac"])
    photons = max(r["photon_count"] for r in sweeps["linac"])
    powers = [r["power_ev_per_s"] for r in sweeps["power"]]
    ratios = [r["ratio"] for r in sweeps["power"]]
    # cumulative radiated fraction of the transverse energy over the linac flight
    cumulative = max(r["total_energy_ev"] / r["E_perp_ev"] for r in sweeps["linac"])

    checks = {
        "tem_total~1e-5eV": 1e-5 / factor <= tem_total <= 1e-5 * factor,
        "linac_total~3.5e-2eV": 3.5e-2 / factor <= linac_total <= 3.5e-2 * factor,
        "photons~350": 350 / factor <= photons <= 350 * factor,
        "power_span_1e-7..1e4": min(powers) <= 1e-7 * factor and max(powers) >= 1e4 / factor,
        "ratio<<1": max(ratios) < 1e-2,
        "linac_cumulative<=1e-6": cumulative <= 1e-6 * factor,
        "sweep<5s": elapsed < 5.0,
    }
    ok = all(checks.values())
    failed = [k for k, v in checks.items() if not v]
    assert _criterion("7a", f"energy-side quoted numbers (tolerance x3): "
                            f"TEM total {tem_total:.2e} eV, linac {linac_total:.2e} eV, "
                            f"{photons:.0f} photons, cumulative {cumulative:.1e}, "
                            f"{elapsed:.1f} s" + (f"; failed: {failed}" if failed else ""),
                      ok)


def test_criterion_7_oam_rate_coverage(reference_sweeps):
    # the continuum of rates passes through every value between the
    # stationary-state zero and the sub-millimeter maximum, so the
    # quoted 1e-14..1e-1 hbar/s interval is attained within the sweep
    sweeps, _ = reference_sweeps
    rates = [abs(r["dLz_dt_hbar_per_s"]) for r in sweeps["oam"]]
    sl_nm = landau_width(H_1T) * 1e7
    cfg = resolve(flag_values={"preset": "tem", "n": 0, "l": 10,
                               "sigma0_prime_over_c": 0.0})
    near = sweep_rows(cfg, SweepSpec(sigma0_min_nm=sl_nm * (1 + 2e-4),
                                     sigma0_max_nm=sl_nm * (1 + 2e-3),
                                     points=8, scale="log"))
    rates.extend(abs(r["dLz_dt_hbar_per_s"]) for r in near)
    ok = min(rates) <= 1e-14 and max(rates) >= 1e-1
    assert _criterion("7b", f"swept |dLz/dt| covers [1e-14, 1e-1] hbar/s "
                            f"(attained {min(rates):.1e}..{max(rates):.1e})", ok)


def test_criterion_7_oam_magnitudes_as_quoted(reference_sweeps):
    # EXPECTED RED: quoted OAM magnitudes contradict the closed-form
    # rate pinned by criteria 1-3; asserted as quoted, not weakened
    sweeps, _ = reference_sweeps
    factor = 3.0
    nm_scale_rate = abs(sweeps["oam"][0]["dLz_dt_hbar_per_s"])  # sigma0 = 1 nm
    submm_max = max(abs(r["dLz_dt_hbar_per_s"]) for r in sweeps["oam"])
    linac_cfg = resolve(flag_values={"preset": "linac-1km", "n": 0, "l": 10,
                                     "sigma0_prime_over_c": 0.0})
    linac_rows = sweep_rows(linac_cfg, SweepSpec(1.0, 9.0e5, 300, "log"))
    total_dlz = max(abs(r["total_dLz_hbar"]) for r in linac_rows)
    min_loss_time = min(r["oam_quantum_loss_time_s"] for r in linac_rows)

    checks = {
        "nm_rate~1e-14": nm_scale_rate <= 1e-14 * factor,
        "submm_max~0.1": 0.1 / factor <= submm_max <= 0.1 * factor,
        "linac_dLz~1e-7hbar": 1e-7 / factor <= total_dlz <= 1e-7 * factor,
        "loss_time>=1e3s": min_loss_time >= 1e3,
    }
    ok = all(checks.values())
    failed = [k for k, v in checks.items() if not v]
    _criterion("7c", f"quoted OAM magnitudes (EXPECTED RED): nm-scale rate "
                     f"{nm_scale_rate:.1e}, sub-mm max {submm_max:.1e} hbar/s, "
                     f"linac total {total_dlz:.1e} hbar, min loss time "
                     f"{min_loss_time:.1e} s; failed: {failed}", ok)
    assert ok, ("quoted OAM magnitudes are ~8-9 orders away from the "
                "closed-form rate verified by the oracle (see decisions ledger)")


def test_criterion_8_degenerate_suite():
    sl = landau_width(H_1T)
    state = make_state(0, 10, sl, 0.0, H_1T, sigma_z=1e-5)
    q, bp = state.quantum, state.breathing
    r_grid = np.linspace(0.0, 8 * sl, 50)
    j_r = current_density(r_grid, 0.0, 0.0, 0.4 * bp.period, state)[0]
    report = flight_report(Scenario.tem(), q, bp)
    ok = (avg_power(q, bp) == 0.0 and avg_oam_rate(q, bp) == 0.0
          and np.all(j_r == 0.0) and report.oam_quantum_loss_time_s == np.inf
          and numeric_avg_power(state) == 0.0)
    assert _criterion(8, "Landau packet: zero power, zero OAM rate, zero radial "
                         "current, infinite quantum-loss time", ok)


def test_criterion_9_fringe():
    xs = np.linspace(0.0, 10.0, 41)
    fresnel_err = max(abs(fresnel_c(x) - fresnel_c_quadrature(x)) for x in xs)

    omega = abs(cyclotron_frequency(H_1T))
    fs = FringeScenario(d_diameter=1.0, omega_c_inner=omega)
    q = PacketQuantumNumbers(0, 5)
    pkt = LongitudinalPacket(p0=0.1 * 9.1093837015e-28 * C_LIGHT, sigma_z=2e-5)

    bp_landau = breathing_params(InitialTransverseState(landau_width(H_1T), 0.0), H_1T)
    landau_obs = transit_observables(fs, q, bp_landau, pkt, 100.0)
    all_zero = (landau_obs.power_erg_s == 0.0 and landau_obs.dL_int_erg == 0.0
                and landau_obs.dL_p0_erg == 0.0 and landau_obs.dL_rad_erg == 0.0)

    bp = breathing_params(InitialTransverseState(5e-4, 1e-4 * C_LIGHT), H_1T)
    with_p0 = transit_observables(fs, q, bp, pkt, 100.0)
    no_p0 = transit_observables(fs, q, bp, LongitudinalPacket(0.0, pkt.sigma_z), 100.0)
    p0_isolated = (no_p0.dL_p0_erg == 0.0 and with_p0.dL_p0_erg != 0.0
                   and no_p0.power_erg_s == with_p0.power_erg_s)

    base = transit_observables(fs, q, bp, pkt, 1.0)
    linear = all(
        transit_observables(fs, q, bp, pkt, r).dL_rad_erg
        == pytest.approx(r * base.dL_rad_erg, rel=1e-12)
        for r in (10.0, 100.0))

    ok = fresnel_err <= 1e-9 and all_zero and p0_isolated and linear
    assert _criterion(9, f"fringe: Fresnel oracle err {fresnel_err:.1e}, degenerate "
                         "zeroing, p0 isolation, radiative term linear in R", ok)


def test_criterion_10_determinism(tmp_path):
    def run(args, name):
        out = tmp_path / name
        assert main(args + ["--out", str(out)]) == 0
        return out.read_bytes()

    verify_args = ["verify", "--seed", "5", "--cases", "3", "--grid", "24"]
    sweep_args = ["power-sweep", "--points", "40", "--sigma0-prime-over-c=-3.1e-4"]
    angular_args = ["angular", "--resolution", "61"]
    ok = (run(verify_args, "v1") == run(verify_args, "v2")
          and run(sweep_args, "s1") == run(sweep_args, "s2")
          and run(angular_args, "a1") == run(angular_args, "a2"))
    assert _criterion(10, "verify and sweep outputs byte-identical across runs", ok)
