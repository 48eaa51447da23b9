"""Physical constants in CGS (Gaussian) units and SI/eV conversions.

All internal math in this package is CGS with the electron charge
negative, e < 0.  User-facing quantities (tesla, eV, nanometers) are
converted at the boundary.  Values are CODATA 2018.
"""

import numpy as np

E_CHARGE = -4.80320471257e-10   # statC, electron charge (negative)
M_ELECTRON = 9.1093837015e-28   # g
C_LIGHT = 2.99792458e10         # cm/s
HBAR = 1.054571817e-27          # erg s

ERG_PER_EV = 1.602176634e-12    # erg/eV (exact)
GAUSS_PER_TESLA = 1.0e4

LAMBDA_C = HBAR / (M_ELECTRON * C_LIGHT)            # cm, reduced Compton wavelength
MU_B = abs(E_CHARGE) * HBAR / (2 * M_ELECTRON * C_LIGHT)  # erg/G, Bohr magneton
MC2_ERG = M_ELECTRON * C_LIGHT**2                   # erg, electron rest energy


class ZeroFieldError(ValueError):
    """Raised when an operation needs a nonzero magnetic field."""


def tesla_to_gauss(h_tesla):
    return h_tesla * GAUSS_PER_TESLA


def gauss_to_tesla(h_gauss):
    return h_gauss / GAUSS_PER_TESLA


def erg_to_ev(x):
    return x / ERG_PER_EV


def ev_to_erg(x):
    return x * ERG_PER_EV


def cyclotron_frequency(h_gauss):
    """Signed cyclotron frequency e*H/(m*c) in rad/s.

    Negative for H > 0 because e < 0.  H = 0 gives 0.
    """
    return E_CHARGE * h_gauss / (M_ELECTRON * C_LIGHT)


def cyclotron_period(h_gauss):
    """Cyclotron period 2*pi/|omega_c| in seconds."""
    omega = cyclotron_frequency(h_gauss)
    if omega == 0.0:
        raise ZeroFieldError("cyclotron period undefined at zero field")
    return 2 * np.pi / abs(omega)


def landau_width(h_gauss):
    """r.m.s. radius sqrt(2*hbar*c/|e*H|) of the lowest Landau state, cm."""
    if h_gauss == 0.0:
        raise ZeroFieldError("no Landau scale in free space")
    return np.sqrt(2 * HBAR * C_LIGHT / abs(E_CHARGE * h_gauss))


def energy_to_velocity(e_kin_ev):
    """Longitudinal velocity in cm/s from kinetic energy in eV (relativistic)."""
    if e_kin_ev < 0:
        raise ValueError("kinetic energy must be non-negative")
    gamma = 1.0 + ev_to_erg(e_kin_ev) / MC2_ERG
    return C_LIGHT * np.sqrt(1.0 - 1.0 / gamma**2)
