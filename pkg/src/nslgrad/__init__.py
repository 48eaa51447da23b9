"""Radiation of breathing vortex-electron packets in a longitudinal magnetic field.

A library plus sweep CLI for the period-averaged radiated power, OAM
loss rate, angular distributions, semiclassical applicability ratios,
and fringe-field transition corrections of nonstationary
Laguerre-Gaussian electron states, with a brute-force quadrature
oracle verifying every closed form.
"""

from .constants import (C_LIGHT, E_CHARGE, HBAR, LAMBDA_C, M_ELECTRON, MU_B,
                        ZeroFieldError, cyclotron_frequency, cyclotron_period,
                        energy_to_velocity, erg_to_ev, ev_to_erg, landau_width,
                        tesla_to_gauss)
from .dynamics import (BreathingParams, InitialTransverseState,
                       PacketQuantumNumbers, breathing_params,
                       inverse_curvature, rho_sq_derivative, sigma_sq,
                       sign_function)
from .fields import (EMFieldSample, ObservationPoint, PoyntingDecomposition,
                     dLz_dt_far, em_fields, oam_flux_far,
                     oam_flux_from_poynting, potentials, poynting)
from .fringe import (FringeScenario, TransitObservables, adiabatic_check,
                     fresnel_c, transit_observables)
from .observables import (RadiationReport, Scenario,
                          angular_power_distribution, avg_oam_rate, avg_power,
                          flight_report, transverse_energy)
from .oracle import (SphereQuadrature, TimeAverage, finite_difference,
                     numeric_avg_oam_rate, numeric_avg_power, scaling_slope)
from .sources import (charge_density, continuity_residual, current_density,
                      laguerre, longitudinal_density)
from .state import (LongitudinalPacket, PacketState, RadiatingState,
                    make_state)

__version__ = "0.1.0"
