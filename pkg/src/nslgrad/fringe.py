"""Transition radiation at the solenoid ends (adiabatic linear-ramp model).

The cyclotron frequency is ramped linearly over the transit time
T ~ 2D/c through the fringe region of a solenoid of diameter D.  The
four transit-averaged observables share a bracket factor

    BR(w, s) = (4/5) w^2 + 1 + (9/16) sqrt(pi/w) C(2 sqrt(w/pi))
               + ((s - 3)/8) cos(2w) - (w/2) sin(2w),    w = omega_c*T,

with C the cosine Fresnel integral.  The formulas require w > 0; the
sqrt(pi/w) piece diverges at 0+, so evaluation below w = 1e-3 is
refused rather than extrapolated.  The (s - 3)/8 coefficient is not
symmetric under s -> -s; it is kept exactly as derived.

The radiative OAM term grows linearly with the observation radius R
with no cutoff; callers must supply R and the result is labeled with
it.
"""

from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad
from scipy.special import fresnel

from .constants import C_LIGHT, E_CHARGE, HBAR, M_ELECTRON

MIN_OMEGA_T = 1.0e-3
ADIABATIC_THRESHOLD = 0.1


@dataclass(frozen=True)
class FringeScenario:
    """Fringe region of a solenoid: diameter D (cm), inner |omega_c| (rad/s)."""

    d_diameter: float
    omega_c_inner: float

    def __post_init__(self):
        if self.d_diameter <= 0:
            raise ValueError("solenoid diameter must be positive")

    @property
    def t_transit(self):
        """Transit time through the fringe region of length 2D, s."""
        return 2.0 * self.d_diameter / C_LIGHT

    @property
    def omega_c_rate(self):
        """Linear ramp rate omega_c/T, rad/s^2."""
        return self.omega_c_inner / self.t_transit


@dataclass(frozen=True)
class TransitObservables:
    """The four transit-averaged quantities plus the shared ingredients."""

    power_erg_s: float
    dL_int_erg: float
    dL_p0_erg: float
    dL_rad_erg: float
    bracket: float
    omega_c_t: float
    fresnel_arg: float
    fresnel_value: float
    observation_radius_cm: float


def fresnel_c(x):
    """Cosine Fresnel integral C(x) = int_0^x cos(pi t^2/2) dt for x >= 0."""
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise ValueError("fresnel_c is defined for x >= 0")
    _, c_val = fresnel(x)
    return c_val if c_val.ndim else float(c_val)


def fresnel_c_quadrature(x, tol=1.0e-12):
    """Brute-force oracle for C(x) by adaptive quadrature of the integrand."""
    val, _ = quad(lambda t: np.cos(0.5 * np.pi * t * t), 0.0, x,
                  epsabs=tol, epsrel=tol, limit=500)
    return val


def adiabatic_check(fs):
    """Ramp-slowness ratio |d(omega_c)/dt| / omega_c^2 and the pass flag.

    Adiabatic when strictly below 0.1; the boundary itself fails.
    """
    if fs.omega_c_inner == 0.0:
        return 0.0, True
    ratio = abs(fs.omega_c_rate) / fs.omega_c_inner**2
    return ratio, ratio < ADIABATIC_THRESHOLD


def transit_bracket(omega_c_t, s_sign):
    """Shared trigonometric bracket of the transit averages."""
    w = omega_c_t
    return (
        0.8 * w**2
        + 1.0
        + (9.0 / 16.0) * np.sqrt(np.pi / w) * fresnel_c(2.0 * np.sqrt(w / np.pi))
        + (s_sign - 3.0) / 8.0 * np.cos(2.0 * w)
        - 0.5 * w * np.sin(2.0 * w)
    )


def transit_observables(fs, q, bp, pkt, observation_radius):
    """Transit-averaged power and OAM rates for the fringe crossing.

    Every output carries sigma_st^4 - sigma_L^4 (or its square root)
    and vanishes for a stationary Landau packet.
    """
    omega = fs.omega_c_inner
    t_tr = fs.t_transit
    w = omega * t_tr
    if w <= 0.0:
        raise ValueError("omega_c * T must be positive for the transit averages")
    if w < MIN_OMEGA_T:
        raise ValueError(f"omega_c * T = {w:.3e} below the evaluated range ({MIN_OMEGA_T})")
    if bp.sigma_st < bp.sigma_L:
        raise ValueError("sigma_st must be >= sigma_L")

    g = q.degeneracy
    s = bp.s_sign
    e, m, c, hb = E_CHARGE, M_ELECTRON, C_LIGHT, HBAR
    dsig4 = bp.sigma_st**4 - bp.sigma_L**4
    root_dsig4 = np.sqrt(dsig4)
    bracket = transit_bracket(w, s)

    power = g**2 * omega**2 * e**2 / (12.0 * t_tr**2 * c**5) * dsig4 * bracket

    dl_int = (omega * e**2 / (4.0 * c**3)) * (
        g * (2.0 * s * omega / (3.0 * t_tr)) * root_dsig4
        * (hb**2 / (5.0 * pkt.sigma_z**2 * m**2 * c**2) - 2.0) * np.cos(w)
        + g**2 * omega**2 / (15.0 * t_tr**2 * c**2) * dsig4 * bracket
    )

    dl_p0 = (g * s * np.pi * omega**2 * e**2 * pkt.p0**2
             / (64.0 * t_tr * m**2 * c**4) * root_dsig4 * np.cos(w))

    dl_rad = (g**2 * 5.0 * np.pi * omega**3 * e**2 * observation_radius
              / (256.0 * t_tr**3 * c**6) * dsig4
              * (w * np.sin(2.0 * w) + (1.0 - 2.0 * w**2) * np.sin(w) ** 2))

    return TransitObservables(
        power_erg_s=power,
        dL_int_erg=dl_int,
        dL_p0_erg=dl_p0,
        dL_rad_erg=dl_rad,
        bracket=float(bracket),
        omega_c_t=w,
        fresnel_arg=float(2.0 * np.sqrt(w / np.pi)),
        fresnel_value=float(fresnel_c(2.0 * np.sqrt(w / np.pi))),
        observation_radius_cm=observation_radius,
    )
