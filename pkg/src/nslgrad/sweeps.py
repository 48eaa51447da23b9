"""Sweep evaluation and CSV emission for the CLI.

All three sweep commands share one row schema with a fixed column
order; values are written in scientific notation with 9 significant
digits, comments prefixed with '#'.
"""

from dataclasses import dataclass

import numpy as np

from .config import ConfigError
from .constants import C_LIGHT, tesla_to_gauss
from .observables import Scenario, flight_report
from .state import make_state

CSV_COLUMNS = (
    "sigma0_nm",
    "sigma_st_nm",
    "s_sign",
    "power_ev_per_s",
    "dLz_dt_hbar_per_s",
    "E_rad_per_period_ev",
    "E_perp_ev",
    "ratio",
    "total_energy_ev",
    "total_dLz_hbar",
    "photon_count",
    "oam_quantum_loss_time_s",
)

NM_PER_CM = 1.0e7


@dataclass(frozen=True)
class SweepSpec:
    """sigma0 grid for a sweep, in nanometers."""

    sigma0_min_nm: float = 1.0
    sigma0_max_nm: float = 9.0e5
    points: int = 300
    scale: str = "log"

    def __post_init__(self):
        if self.sigma0_min_nm <= 0:
            raise ConfigError("sigma0_min_nm must be positive")
        if self.sigma0_max_nm < self.sigma0_min_nm:
            raise ConfigError("sigma0_max_nm must be >= sigma0_min_nm")
        if self.points < 2:
            raise ConfigError("points must be >= 2")
        if self.scale not in ("log", "linear"):
            raise ConfigError("scale must be 'log' or 'linear'")

    def grid_nm(self):
        if self.scale == "log":
            return np.logspace(np.log10(self.sigma0_min_nm),
                               np.log10(self.sigma0_max_nm), self.points)
        return np.linspace(self.sigma0_min_nm, self.sigma0_max_nm, self.points)


def state_from_config(config, sigma0_nm=None):
    sigma0_nm = config["sigma0_nm"] if sigma0_nm is None else sigma0_nm
    return make_state(
        n=config["n"],
        l=config["l"],
        sigma0=sigma0_nm / NM_PER_CM,
        sigma0_prime=config["sigma0_prime_over_c"] * C_LIGHT,
        h_gauss=tesla_to_gauss(config["field_tesla"]),
        sigma_z=config["sigma_z_nm"] / NM_PER_CM,
    )


def scenario_from_config(config):
    return Scenario(
        h_gauss=tesla_to_gauss(config["field_tesla"]),
        d_solenoid=config["solenoid_length_cm"],
        e_kin_ev=config["kinetic_energy_kev"] * 1.0e3,
    )


def sweep_row(config, scenario, sigma0_nm):
    """One CSV row dict for a single sigma0 value."""
    state = state_from_config(config, sigma0_nm=sigma0_nm)
    bp = state.breathing
    report = flight_report(scenario, state.quantum, bp)
    return {
        "sigma0_nm": sigma0_nm,
        "sigma_st_nm": bp.sigma_st * NM_PER_CM,
        "s_sign": bp.s_sign,
        "power_ev_per_s": report.avg_power_ev_s,
        "dLz_dt_hbar_per_s": report.avg_dLz_dt_hbar_s,
        "E_rad_per_period_ev": report.e_rad_per_period_ev,
        "E_perp_ev": report.e_perp_ev,
        "ratio": report.ratio,
        "total_energy_ev": report.total_energy_ev,
        "total_dLz_hbar": report.total_dLz_hbar,
        "photon_count": report.photon_count,
        "oam_quantum_loss_time_s": report.oam_quantum_loss_time_s,
    }


def sweep_rows(config, spec):
    scenario = scenario_from_config(config)
    return [sweep_row(config, scenario, s0) for s0 in spec.grid_nm()]


def format_number(value):
    """9 significant digits, scientific notation; integers written plain."""
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if value == 0.0:
        value = 0.0  # drop negative zero
    return f"{value:.8e}"


def csv_lines(header, rows, columns=CSV_COLUMNS):
    lines = list(header)
    lines.append(",".join(columns))
    for row in rows:
        lines.append(",".join(format_number(row[col]) for col in columns))
    return lines
