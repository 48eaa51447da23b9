"""Charge and current densities of the breathing vortex packet.

The 3D density factorizes into a transverse Laguerre-Gaussian profile
controlled by sigma^2(t) and a spreading longitudinal Gaussian:

    rho(r, t)/e = T(r_perp; sigma^2(t)) * Z(z; t),
    T = (Nperp^2/sigma^2) * x^|l| * L_n^|l|(x)^2 * exp(-x),  x = r_perp^2/sigma^2,
    Z = exp(-ztil^2/sigma_par^2) / (sqrt(pi)*sigma_par),      ztil = z - p0*t/m,

with Nperp^2 = n!/(pi*(n+|l|)!).  The explicit longitudinal
normalization constant is absorbed so that the density integrates to e
exactly; the closed-form constant is cross-checked once in the tests.

Current components (cylindrical basis e_r, e_phi, e_z):

    j_r   = e * c * r_perp * (1/curvature) * T * Z
    j_phi = e * (hbar/m) * (l/r_perp - e*H*r_perp/(2*c*hbar)) * T * Z
    j_z   = e * (hbar^2*ztil*t/(m^2*sigma_z^2*sigma_par^2) + p0/m) * T * Z

The Gaussian envelope is assembled in log space so large |l| cannot
overflow r_perp^(2|l|).
"""

import math

import numpy as np

from .constants import C_LIGHT, E_CHARGE, HBAR, M_ELECTRON
from .dynamics import inverse_curvature, sigma_sq, sigma_sq_derivative
from .state import LongitudinalPacket, RadiatingState  # noqa: F401  (re-export)


def laguerre(n, alpha, x):
    """Generalized Laguerre polynomial L_n^alpha(x) by upward recurrence."""
    x = np.asarray(x, dtype=float)
    if n == 0:
        return np.ones_like(x)
    prev = np.ones_like(x)
    cur = 1.0 + alpha - x
    for k in range(1, n):
        prev, cur = cur, ((2 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1)
    return cur


def laguerre_derivative(n, alpha, x):
    """d/dx L_n^alpha(x) = -L_{n-1}^{alpha+1}(x)."""
    x = np.asarray(x, dtype=float)
    if n == 0:
        return np.zeros_like(x)
    return -laguerre(n - 1, alpha + 1, x)


def transverse_norm_sq(q):
    """Nperp^2 = n!/(pi*(n+|l|)!)."""
    return math.factorial(q.n) / (math.pi * math.factorial(q.n + abs(q.l)))


def _power_envelope(x, labs):
    """x^labs * exp(-x), evaluated in log space; 0 at x = 0 for labs >= 1."""
    x = np.asarray(x, dtype=float)
    if labs == 0:
        return np.exp(-x)
    safe = np.where(x > 0.0, x, 1.0)
    out = np.exp(labs * np.log(safe) - safe)
    return np.where(x > 0.0, out, 0.0)


def transverse_density(r_perp, t, q, bp):
    """Transverse probability profile T (1/cm^2); unit 2D normalization."""
    r_perp = np.asarray(r_perp, dtype=float)
    s_sq = sigma_sq(t, bp)
    x = r_perp**2 / s_sq
    lag = laguerre(q.n, abs(q.l), x)
    return transverse_norm_sq(q) / s_sq * _power_envelope(x, abs(q.l)) * lag**2


def longitudinal_density(z, t, pkt):
    """|psi_par(z, t)|^2, a unit-normalized spreading Gaussian (1/cm)."""
    z = np.asarray(z, dtype=float)
    var = pkt.sigma_par_sq(t)
    ztil = z - pkt.centroid(t)
    return np.exp(-(ztil**2) / var) / np.sqrt(np.pi * var)


def charge_density(r_perp, phi, z, t, state):
    """Charge density e*|Psi|^2 in statC/cm^3; independent of phi."""
    del phi  # azimuthally symmetric
    trans = transverse_density(r_perp, t, state.quantum, state.breathing)
    return E_CHARGE * trans * longitudinal_density(z, t, state.longitudinal)


def current_density(r_perp, phi, z, t, state):
    """Current density in statC/(cm^2 s), cylindrical components (r, phi, z)."""
    del phi
    q = state.quantum
    bp = state.breathing
    pkt = state.longitudinal
    r_perp = np.asarray(r_perp, dtype=float)

    prob = transverse_density(r_perp, t, q, bp) * longitudinal_density(z, t, pkt)

    j_r = E_CHARGE * C_LIGHT * r_perp * inverse_curvature(t, bp) * prob

    # l/r_perp stays finite: the density carries r_perp^(2|l|)
    if q.l != 0:
        with np.errstate(divide="ignore", invalid="ignore"):
            prob_over_r = np.where(r_perp > 0.0, prob / np.where(r_perp > 0.0, r_perp, 1.0), 0.0)
        vortex_term = q.l * prob_over_r
    else:
        vortex_term = np.zeros_like(prob)
    diamagnetic = state.h_gauss * E_CHARGE / (2 * C_LIGHT * HBAR) * r_perp * prob
    j_phi = E_CHARGE * HBAR / M_ELECTRON * (vortex_term - diamagnetic)

    var = pkt.sigma_par_sq(t)
    ztil = np.asarray(z, dtype=float) - pkt.centroid(t)
    spread_velocity = HBAR**2 * ztil * t / (M_ELECTRON**2 * pkt.sigma_z**2 * var)
    j_z = E_CHARGE * (spread_velocity + pkt.p0 / M_ELECTRON) * prob

    return j_r, j_phi, j_z


def charge_density_dt(r_perp, z, t, state):
    """Analytic time derivative of the charge density, statC/(cm^3 s).

    Chain rule over the three time dependencies: breathing sigma^2(t),
    longitudinal spreading sigma_par^2(t), drifting centroid.
    """
    q = state.quantum
    bp = state.breathing
    pkt = state.longitudinal
    labs = abs(q.l)
    r_perp = np.asarray(r_perp, dtype=float)

    s_sq = sigma_sq(t, bp)
    x = r_perp**2 / s_sq
    lag = laguerre(q.n, labs, x)
    dlag = laguerre_derivative(q.n, labs, x)
    envelope = transverse_norm_sq(q) / s_sq * _power_envelope(x, labs)
    trans = envelope * lag**2
    # dT/d(sigma^2) = -(envelope/sigma^2) * ((1 + |l| - x)*L^2 + 2*x*L*L')
    dtrans_dssq = -(envelope / s_sq) * ((1.0 + labs - x) * lag**2 + 2.0 * x * lag * dlag)

    var = pkt.sigma_par_sq(t)
    ztil = np.asarray(z, dtype=float) - pkt.centroid(t)
    zgauss = np.exp(-(ztil**2) / var) / np.sqrt(np.pi * var)
    dz_dvar = zgauss * (-0.5 / var + ztil**2 / var**2)
    dz_dztil = zgauss * (-2.0 * ztil / var)
    dvar_dt = 2.0 * HBAR**2 * t / (M_ELECTRON**2 * pkt.sigma_z**2)

    dprob_dt = (
        dtrans_dssq * sigma_sq_derivative(t, bp) * zgauss
        + trans * (dz_dvar * dvar_dt + dz_dztil * (-pkt.p0 / M_ELECTRON))
    )
    return E_CHARGE * dprob_dt


def _divergence_fd(xg, yg, zg, t, state, step_scale=1.0e-5):
    """div(j) on a Cartesian grid by Richardson-extrapolated central differences."""
    bp = state.breathing
    sigma_t = np.sqrt(sigma_sq(t, bp))
    sigma_par = np.sqrt(state.longitudinal.sigma_par_sq(t))

    def j_cartesian(x, y, z):
        r = np.hypot(x, y)
        j_r, j_phi, j_z = current_density(r, 0.0, z, t, state)
        with np.errstate(invalid="ignore"):
            cphi = np.where(r > 0.0, x / np.where(r > 0.0, r, 1.0), 1.0)
            sphi = np.where(r > 0.0, y / np.where(r > 0.0, r, 1.0), 0.0)
        return (j_r * cphi - j_phi * sphi, j_r * sphi + j_phi * cphi, j_z)

    def partial(axis, h):
        if axis == 0:
            return (j_cartesian(xg + h, yg, zg)[0] - j_cartesian(xg - h, yg, zg)[0]) / (2 * h)
        if axis == 1:
            return (j_cartesian(xg, yg + h, zg)[1] - j_cartesian(xg, yg - h, zg)[1]) / (2 * h)
        return (j_cartesian(xg, yg, zg + h)[2] - j_cartesian(xg, yg, zg - h)[2]) / (2 * h)

    div = 0.0
    for axis, scale in ((0, sigma_t), (1, sigma_t), (2, sigma_par)):
        h = step_scale * scale
        coarse = partial(axis, h)
        fine = partial(axis, 0.5 * h)
        div = div + (4.0 * fine - coarse) / 3.0
    return div


def continuity_residual(state, t, n_grid=64, half_width=4.0):
    """max|d(rho)/dt + div(j)| / max|d(rho)/dt| on an n_grid^3 box.

    The box spans +-half_width packet widths transversely (on top of the
    Laguerre radius sqrt(2n+|l|+1)*sigma) and around the drifting
    centroid longitudinally.  This is the decisive structural check of
    the curvature closure used for the radial current.
    """
    bp = state.breathing
    q = state.quantum
    sigma_t = float(np.sqrt(sigma_sq(t, bp)))
    sigma_par = float(np.sqrt(state.longitudinal.sigma_par_sq(t)))
    l_perp = (np.sqrt(q.degeneracy) + half_width) * sigma_t
    z_c = float(state.longitudinal.centroid(t))

    axis_perp = np.linspace(-l_perp, l_perp, n_grid)
    axis_z = np.linspace(z_c - half_width * sigma_par, z_c + half_width * sigma_par, n_grid)
    xg, yg, zg = np.meshgrid(axis_perp, axis_perp, axis_z, indexing="ij")

    rho_dt = charge_density_dt(np.hypot(xg, yg), zg, t, state)
    residual = rho_dt + _divergence_fd(xg, yg, zg, t, state)
    scale = np.max(np.abs(rho_dt))
    return float(np.max(np.abs(residual)) / scale)
