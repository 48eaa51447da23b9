"""Randomized oracle verification suite behind the `verify` CLI command.

Each case draws packet parameters, then checks the closed-form
observables against brute-force quadrature, the R-scaling exponents,
and the source continuity equation.  Cases are drawn away from the
stationary-Landau neighborhood (oscillation amplitude and magnitude
floor enforced) so the 1e-8 relative comparisons stay numerically
conditioned: extracting the period-mean interference flux cancels an
oscillating component that is ~c^2/(g*A*sigma_st^2*omega_c^2) times
larger than the mean.

The report also surfaces, without correcting, the convention
discrepancies this implementation is aware of: the sqrt(2) between the
two Landau-width conventions, an alternate quoted cyclotron frequency
for a 1 T field, and the 16*pi/5 normalization factor of the raw
angular power form.
"""

from dataclasses import dataclass

import numpy as np

from .constants import (C_LIGHT, ERG_PER_EV, HBAR, M_ELECTRON,
                        cyclotron_frequency, cyclotron_period, landau_width,
                        tesla_to_gauss)
from .fields import _poynting_parts, dLz_dt_far
from .observables import (ANGULAR_SHAPE_SOLID_ANGLE, avg_oam_rate, avg_power)
from .oracle import (numeric_avg_oam_rate, numeric_avg_power, scaling_slope)
from .sources import continuity_residual
from .state import make_state

POWER_TOL = 1.0e-8
OAM_TOL = 1.0e-8
FAR_AVG_TOL = 1.0e-9
RATIO_TOL = 1.0e-12
SLOPE_TOL = 1.0e-3
CONTINUITY_TOL = 1.0e-6
CONDITIONING_FLOOR = 2.0e15  # g*A*sigma_st^2*omega_c^2 in cm^2/s^2


@dataclass
class CaseResult:
    index: int
    n: int
    l: int
    sigma0_um: float
    s_sign: int
    h_tesla: float
    power_rel: float
    power_alt_rel: float
    oam_rel: float
    far_avg_frac: float
    ratio_err: float
    slope_far: float
    slope_int: float
    slope_oam_far: float
    continuity: float

    @property
    def ok(self):
        return (
            self.power_rel <= POWER_TOL
            and self.oam_rel <= OAM_TOL
            and self.far_avg_frac <= FAR_AVG_TOL
            and self.ratio_err <= RATIO_TOL
            and abs(self.slope_far + 2.0) <= SLOPE_TOL
            and abs(self.slope_int + 3.0) <= SLOPE_TOL
            and abs(self.slope_oam_far - 1.0) <= SLOPE_TOL
            and self.continuity <= CONTINUITY_TOL
        )


def sample_state(rng):
    """One well-conditioned random packet; returns (state, h_tesla, sigma0_cm)."""
    while True:
        n = int(rng.integers(0, 4))
        l = int(rng.integers(-10, 11))
        sigma0 = 10.0 ** rng.uniform(-3.0, np.log10(2.0e-2))  # 10 um .. 200 um
        sigma0_prime = rng.uniform(-5.0e-4, 5.0e-4) * C_LIGHT
        h_tesla = rng.uniform(0.7, 4.0) * (1.0 if rng.uniform() < 0.5 else -1.0)
        beta = rng.uniform(0.0, 0.3)
        sigma_z = 10.0 ** rng.uniform(np.log10(5.0e-6), -4.0)
        state = make_state(n, l, sigma0, sigma0_prime, tesla_to_gauss(h_tesla),
                           p0=M_ELECTRON * beta * C_LIGHT, sigma_z=sigma_z)
        bp = state.breathing
        conditioning = (state.quantum.degeneracy * bp.amplitude
                        * bp.sigma_st**2 * bp.omega_c**2)
        if bp.s_sign != 0 and conditioning >= CONDITIONING_FLOOR:
            return state, h_tesla, sigma0


def scaling_slopes(state, theta=1.1, phase=0.7):
    """Fitted R-exponents of the far flux, interference flux, and far OAM rate.

    Radii vary at fixed retarded phase and polar angle; the phase is
    chosen away from the oscillation zeros.
    """
    bp = state.breathing
    tau0 = (phase + bp.theta_phase) / bp.breathing_rate
    r_grid = np.logspace(np.log10(1.0e6 * bp.sigma_st), np.log10(1.0e9 * bp.sigma_st), 10)

    def radial_flux(part_index):
        def fn(r):
            parts = _poynting_parts(r, theta, tau0 + r / C_LIGHT, state)[part_index]
            return float(parts[0] * np.sin(theta) + parts[2] * np.cos(theta))

        return fn

    slope_far = scaling_slope(radial_flux(0), r_grid)
    slope_int = scaling_slope(radial_flux(1), r_grid)
    slope_oam = scaling_slope(
        lambda r: float(dLz_dt_far(r, tau0 + r / C_LIGHT, state)), r_grid)
    return slope_far, slope_int, slope_oam


def run_case(index, state, h_tesla, sigma0, rng, grid_n):
    q, bp = state.quantum, state.breathing

    p_closed = avg_power(q, bp)
    p_numeric = numeric_avg_power(state)
    power_rel = abs(p_numeric - p_closed) / p_closed
    power_alt_rel = abs(p_numeric - ANGULAR_SHAPE_SOLID_ANGLE * p_closed) / (
        ANGULAR_SHAPE_SOLID_ANGLE * p_closed)

    rate_closed = avg_oam_rate(q, bp)
    oam = numeric_avg_oam_rate(state)
    oam_rel = abs(oam["interference_z"] - rate_closed) / abs(rate_closed)
    far_frac = abs(oam["far_z_average"]) / oam["far_z_amplitude"]

    ratio_err = abs(p_closed / rate_closed - 3.0 * bp.omega_c) / abs(3.0 * bp.omega_c)

    slope_far, slope_int, slope_oam = scaling_slopes(state)

    t_check = rng.uniform(0.0, bp.period)
    cont = continuity_residual(state, t_check, n_grid=grid_n)

    return CaseResult(
        index=index, n=q.n, l=q.l, sigma0_um=sigma0 * 1.0e4, s_sign=bp.s_sign,
        h_tesla=h_tesla, power_rel=power_rel, power_alt_rel=power_alt_rel,
        oam_rel=oam_rel, far_avg_frac=far_frac, ratio_err=ratio_err,
        slope_far=slope_far, slope_int=slope_int, slope_oam_far=slope_oam,
        continuity=cont,
    )


def _convention_lines():
    h_ref = tesla_to_gauss(1.0)
    sl = landau_width(h_ref)
    sl_alt = sl / np.sqrt(2.0)
    wc = abs(cyclotron_frequency(h_ref))
    tc = cyclotron_period(h_ref)
    quantum_ev = HBAR * wc / ERG_PER_EV
    return [
        "convention checks (flagged values are reported, not corrected):",
        f"  landau width at 1 T, implemented sqrt(2*hbar*c/|e*H|): {sl:.6e} cm ({sl * 1e7:.3f} nm)",
        f"  landau width at 1 T, alternate sqrt(hbar*c/|e*H|):     {sl_alt:.6e} cm ({sl_alt * 1e7:.3f} nm)"
        "  [flagged: conventions differ by sqrt(2); plots quoting ~26 nm match the alternate]",
        f"  cyclotron frequency at 1 T, implemented |e*H/(m*c)|: {wc:.6e} rad/s"
        f" (period {tc * 1e12:.3f} ps, quantum {quantum_ev:.4e} eV)",
        "  cyclotron frequency at 1 T, alternate quoted value: 3.34e+11 rad/s"
        "  [flagged: inconsistent with e*H/(m*c)]",
        f"  raw angular power form integrates to {ANGULAR_SHAPE_SOLID_ANGLE:.6f} x <P>"
        " over the solid angle  [flagged: normalized form carries the 5/(16*pi) prefactor]",
    ]


def run_verification(seed, cases, grid_n=32):
    """Run the randomized suite; returns (report_text, all_ok)."""
    if cases < 1:
        raise ValueError("cases must be >= 1")
    rng = np.random.default_rng(seed)
    results = []
    for i in range(cases):
        state, h_tesla, sigma0 = sample_state(rng)
        results.append(run_case(i + 1, state, h_tesla, sigma0, rng, grid_n))

    lines = [
        "nslgrad verification report",
        f"seed = {seed}",
        f"cases = {cases}",
        f"continuity grid = {grid_n}^3",
        (f"tolerances: power {POWER_TOL:.1e}, oam {OAM_TOL:.1e}, far-average {FAR_AVG_TOL:.1e},"
         f" ratio-identity {RATIO_TOL:.1e}, slopes {SLOPE_TOL:.1e}, continuity {CONTINUITY_TOL:.1e}"),
        "",
    ]
    lines.extend(_convention_lines())
    lines.append("")
    n_match_primary = sum(1 for r in results if r.power_rel <= POWER_TOL)
    n_match_alt = sum(1 for r in results if r.power_alt_rel <= POWER_TOL)
    lines.append(
        "normalization adjudication: numeric far-field integral matched the compact"
        f" closed-form <P> in {n_match_primary}/{cases} cases and the (16*pi/5)-scaled"
        f" angular form in {n_match_alt}/{cases} cases")
    lines.append("")
    header = (" id   n    l  sigma0_um  s  H_tesla   power_rel    oam_rel   far_frac"
              "  ratio_err  slope_far  slope_int  slope_oam  continuity  ok")
    lines.append(header)
    for r in results:
        lines.append(
            f"{r.index:3d}  {r.n:2d}  {r.l:3d}  {r.sigma0_um:9.3f} {r.s_sign:+2d}"
            f"  {r.h_tesla:+7.3f}  {r.power_rel:10.3e} {r.oam_rel:10.3e} {r.far_avg_frac:10.3e}"
            f" {r.ratio_err:10.3e}  {r.slope_far:+9.6f}  {r.slope_int:+9.6f}"
            f"  {r.slope_oam_far:+9.6f}  {r.continuity:10.3e}  {'ok' if r.ok else 'FAIL'}")
    n_ok = sum(1 for r in results if r.ok)
    all_ok = n_ok == cases and n_match_primary == cases
    lines.append("")
    lines.append(f"summary: {n_ok}/{cases} cases passed -> {'PASS' if all_ok else 'FAIL'}")
    return "\n".join(lines) + "\n", all_ok
