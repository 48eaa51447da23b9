"""Far-field-expanded potentials, fields, and energy/OAM flux densities.

Everything is expressed through the mean-square-radius derivatives
d^k rho^2 evaluated at the retarded time tau = t - R/c, on the
cylindrical basis (e_Rperp, e_phi, e_Z) of the observation point
R_perp = R sin(theta), Z = R cos(theta).

Each field splits exactly into a far part scaling as 1/R and a near
part scaling as 1/R^2 (at fixed angle); the Poynting vector then
splits into far (1/R^2), interference (1/R^3) and near (1/R^4) pieces.
The near Poynting piece carries no radiated energy or angular momentum
and is deliberately not computed: PoyntingDecomposition.s_near is
always None.
"""

from dataclasses import dataclass, field

import numpy as np

from .constants import C_LIGHT, E_CHARGE, HBAR, LAMBDA_C, M_ELECTRON
from .dynamics import rho_sq_derivative


@dataclass(frozen=True)
class ObservationPoint:
    """Spherical observation point: distance r (cm) from the solenoid center."""

    r: float
    theta: float
    phi: float = 0.0

    def __post_init__(self):
        if self.r <= 0:
            raise ValueError("observation distance must be positive")

    @property
    def r_perp(self):
        return self.r * np.sin(self.theta)

    @property
    def z(self):
        return self.r * np.cos(self.theta)


@dataclass(frozen=True)
class EMFieldSample:
    """E and H split by R-scaling order; components on (e_Rperp, e_phi, e_Z)."""

    e_far: np.ndarray
    e_near: np.ndarray
    h_far: np.ndarray
    h_near: np.ndarray
    retarded_time: np.ndarray

    @property
    def e_total(self):
        return self.e_far + self.e_near

    @property
    def h_total(self):
        return self.h_far + self.h_near


@dataclass(frozen=True)
class PoyntingDecomposition:
    """Energy flux split by R-scaling order; s_near is omitted by design."""

    s_far: np.ndarray
    s_int: np.ndarray
    retarded_time: np.ndarray
    s_near: None = field(default=None, init=False)


def _stack3(a, b, c):
    return np.stack(np.broadcast_arrays(a, b, c), axis=-1)


def cross_cyl(a, b):
    """Cross product of (..., 3) vectors on a right-handed cylindrical triad."""
    ar, ap, az = a[..., 0], a[..., 1], a[..., 2]
    br, bp, bz = b[..., 0], b[..., 1], b[..., 2]
    return _stack3(ap * bz - az * bp, az * br - ar * bz, ar * bp - ap * br)


def _derivs(tau, state):
    q, bp = state.quantum, state.breathing
    return tuple(rho_sq_derivative(tau, q, bp, k) for k in range(4))


def potentials(obs, t, state):
    """Scalar potential (statV) and vector potential 3-vector at time t.

    All source time dependence enters through the retarded time
    tau = t - R/c, including the longitudinal drift terms.
    """
    r_dist, theta = obs.r, obs.theta
    tau = np.asarray(t, dtype=float) - r_dist / C_LIGHT
    r_perp = r_dist * np.sin(theta)
    z = r_dist * np.cos(theta)
    p0 = state.longitudinal.p0
    sigma_z = state.longitudinal.sigma_z
    rho2, d1, d2, _ = _derivs(tau, state)

    e, m, c, hb = E_CHARGE, M_ELECTRON, C_LIGHT, HBAR
    h_ext = state.h_gauss

    phi_pot = (e / r_dist) * (1.0 + z * p0 * tau / (r_dist**2 * m))

    pref = e * hb / (2.0 * r_dist**2 * m * c**2)
    a_r = pref * (r_perp / (2.0 * LAMBDA_C * c)) * ((c / r_dist) * d1 + d2)
    a_phi = pref * r_perp * (
        state.quantum.l * c / r_dist
        - (e * h_ext / (2.0 * hb * c)) * ((c * rho2 / r_dist) + d1)
    )
    a_z = pref * (2.0 / hb) * (
        (z * c * tau / (r_dist * m)) * (hb**2 / (2.0 * sigma_z**2) + p0**2)
        + r_dist * p0 * c
    )
    return phi_pot, _stack3(a_r, a_phi, a_z)


def _field_parts(r_dist, theta, t, state):
    """Raw field components split by R-order; broadcasts theta and t."""
    theta = np.asarray(theta, dtype=float)
    tau = np.asarray(t, dtype=float) - r_dist / C_LIGHT
    theta, tau = np.broadcast_arrays(theta, tau)
    r_perp = r_dist * np.sin(theta)
    z = r_dist * np.cos(theta)

    e, m, c, hb = E_CHARGE, M_ELECTRON, C_LIGHT, HBAR
    h_ext = state.h_gauss
    p0 = state.longitudinal.p0
    sigma_z = state.longitudinal.sigma_z
    _, d1, d2, d3 = _derivs(tau, state)
    R = r_dist

    pref_er = e * r_perp / R**2
    e_r_far = -pref_er * hb / (4.0 * LAMBDA_C * m * c**4) * d3
    e_r_near = (
        pref_er * (1.0 / R) * (1.0 + 3.0 * z * p0 / (R * m * c))
        - pref_er * hb / (4.0 * LAMBDA_C * m * c**4) * (c / R) * d2
    )

    pref_ephi = e**2 * h_ext * r_perp / (4.0 * R**2 * m * c**4)
    e_phi_far = pref_ephi * d2
    e_phi_near = pref_ephi * (c / R) * d1

    e_z_far = np.zeros_like(theta)
    e_z_near = (e / R**3) * (
        z * (1.0 - (hb**2 / (2.0 * sigma_z**2) + p0**2) / (m**2 * c**2))
        + (2.0 * z**2 - r_perp**2) * p0 / (R * m * c)
    )

    pref_hr = -(e**2 * h_ext * r_perp * z / (4.0 * R**3 * m * c**4))
    h_r_far = pref_hr * d2
    h_r_near = pref_hr * (3.0 * c / R) * d1

    pref_hphi = e * hb * r_perp / (2.0 * R**3 * m * c**4)
    h_phi_far = pref_hphi * (-(z / (2.0 * LAMBDA_C)) * d3)
    h_phi_near = pref_hphi * (
        -(z / (2.0 * LAMBDA_C)) * (3.0 * c / R) * d2
        + 3.0 * hb * z * c**2 / (R * m * sigma_z**2)
        + (2.0 * p0 * c**3 / hb) * (1.0 + 2.0 * z * p0 / (R * m * c))
    )

    pref_hz = e**2 * h_ext / (4.0 * R**2 * m * c**3)
    h_z_far = pref_hz * (r_perp**2 / (R * c)) * d2
    h_z_near = pref_hz * ((3.0 * r_perp**2 / R**2) * d1 - 2.0 * d1)

    return {
        "e_far": (e_r_far, e_phi_far, e_z_far),
        "e_near": (e_r_near, e_phi_near, e_z_near),
        "h_far": (h_r_far, h_phi_far, h_z_far),
        "h_near": (h_r_near, h_phi_near, h_z_near),
        "tau": tau,
    }


def em_fields(obs, t, state):
    """Electric and magnetic fields at (obs, t), split by R-scaling order."""
    parts = _field_parts(obs.r, obs.theta, t, state)
    return EMFieldSample(
        e_far=_stack3(*parts["e_far"]),
        e_near=_stack3(*parts["e_near"]),
        h_far=_stack3(*parts["h_far"]),
        h_near=_stack3(*parts["h_near"]),
        retarded_time=parts["tau"],
    )


def _poynting_parts(r_dist, theta, t, state):
    """Far and interference Poynting components; broadcasts theta and t."""
    return _poynting_parts_tau(r_dist, theta,
                               np.asarray(t, dtype=float) - r_dist / C_LIGHT, state)


def _poynting_parts_tau(r_dist, theta, tau, state):
    """Same as _poynting_parts but parameterized by the retarded time.

    Period averages are invariant under the t -> tau shift; evaluating
    on a tau grid avoids the phase precision lost when subtracting an
    R/c offset millions of periods long.
    """
    theta = np.asarray(theta, dtype=float)
    theta, tau = np.broadcast_arrays(theta, np.asarray(tau, dtype=float))
    r_perp = r_dist * np.sin(theta)
    z = r_dist * np.cos(theta)

    e, m, c, hb = E_CHARGE, M_ELECTRON, C_LIGHT, HBAR
    h_ext = state.h_gauss
    omega_c = state.breathing.omega_c
    p0 = state.longitudinal.p0
    sigma_z = state.longitudinal.sigma_z
    sigma_p = hb / sigma_z
    _, d1, d2, d3 = _derivs(tau, state)
    R = r_dist

    pref_far = e**2 * r_perp**2 / (64.0 * np.pi * R**5 * c**5)
    s_far = (
        pref_far * omega_c**2 * r_perp * d2**2,
        pref_far * omega_c * r_perp * d3 * d2,
        pref_far * z * (d3**2 + omega_c**2 * d2**2),
    )

    pref_int = e**2 * r_perp / (16.0 * np.pi * R**4 * c**2)
    s_int_r = pref_int * (
        omega_c**2 * d2 * d1 / (2.0 * c**2) * (2.0 * r_perp**2 / R**2 - 1.0)
        + (z * d3 / R**2) * (
            z
            - hb**2 * z / (2.0 * sigma_z**2 * m**2 * c**2)
            - (hb * p0 / (LAMBDA_C * m**2 * c**2))
            * ((r_perp**2 - 2.0 * z**2) / R + z * p0 / (m * c))
        )
    )
    s_int_phi = pref_int * omega_c * (
        d3 * d1 / (4.0 * c**2) * (3.0 * r_perp**2 / R**2 - 2.0)
        - d2 * (
            1.0
            - hb**2 * z**2 / (2.0 * sigma_z**2 * R**2 * m**2 * c**2)
            + (e * h_ext * z * p0 / (R * m**2 * c**2 * omega_c))
            * (2.0 - z * p0 / (R * m * c))
            - r_perp**2 * d2 / (4.0 * R**2 * c**2)
        )
    )
    s_int_z = pref_int * (r_perp / R) * (
        d3 * (
            z * d2 / (R * c**2)
            + 3.0 * z * sigma_p**2 / (2.0 * R * m**2 * c**2)
            - z / R
            - (hb * p0 / (LAMBDA_C * m**2 * c**2))
            * (1.0 + 2.0 * z * p0 / (R * m * c) + 3.0 * z**2 / R**2)
        )
        + omega_c**2 * z * d2 * d1 / (R * c**2)
    )

    return s_far, (s_int_r, s_int_phi, s_int_z), tau


def poynting(obs, t, state):
    """Far and interference parts of the Poynting vector, erg/(cm^2 s)."""
    s_far, s_int, tau = _poynting_parts(obs.r, obs.theta, t, state)
    return PoyntingDecomposition(s_far=_stack3(*s_far), s_int=_stack3(*s_int),
                                 retarded_time=tau)


def oam_flux_far(obs, t, state):
    """Far-field angular-momentum flux density 3-vector, erg/(cm^2)."""
    r_dist, theta = obs.r, obs.theta
    tau = np.asarray(t, dtype=float) - r_dist / C_LIGHT
    r_perp = r_dist * np.sin(theta)
    z = r_dist * np.cos(theta)
    omega_c = state.breathing.omega_c
    _, _, d2, d3 = _derivs(tau, state)

    pref = E_CHARGE**2 * r_perp**2 / (64.0 * np.pi * r_dist**5 * C_LIGHT**6)
    return _stack3(
        -pref * omega_c * r_perp * z * d3 * d2,
        -pref * r_perp * z * d3**2,
        pref * omega_c * r_perp**2 * d3 * d2,
    )


def dLz_dt_far(r_dist, t, state):
    """Sphere-integrated far-field OAM z-rate, erg; grows linearly with R
    but averages to zero over a breathing period."""
    tau = np.asarray(t, dtype=float) - r_dist / C_LIGHT
    _, _, d2, d3 = _derivs(tau, state)
    omega_c = state.breathing.omega_c
    return E_CHARGE**2 * r_dist * omega_c / (30.0 * C_LIGHT**6) * d3 * d2


def oam_flux_from_poynting(obs, s_vec):
    """Angular-momentum flux density f = (R x S)/c on the cylindrical triad."""
    r_perp = obs.r * np.sin(obs.theta)
    z = obs.r * np.cos(obs.theta)
    s_r, s_phi, s_z = s_vec[..., 0], s_vec[..., 1], s_vec[..., 2]
    return _stack3(
        -z * s_phi / C_LIGHT,
        (z * s_r - r_perp * s_z) / C_LIGHT,
        r_perp * s_phi / C_LIGHT,
    )
