"""Packet state containers shared by the source and field modules."""

from dataclasses import dataclass

import numpy as np

from .constants import C_LIGHT, E_CHARGE, HBAR, LAMBDA_C, M_ELECTRON
from .dynamics import (BreathingParams, InitialTransverseState,
                       PacketQuantumNumbers, breathing_params)


@dataclass(frozen=True)
class LongitudinalPacket:
    """Gaussian longitudinal packet: mean momentum p0 (g cm/s), waist sigma_z (cm)."""

    p0: float
    sigma_z: float

    def __post_init__(self):
        if self.sigma_z <= 0:
            raise ValueError("sigma_z must be positive")

    @property
    def t_diffraction(self):
        """Spreading time sigma_z^2/(c*lambda_C), s."""
        return self.sigma_z**2 / (C_LIGHT * LAMBDA_C)

    def sigma_par_sq(self, t):
        """Squared longitudinal width scale sigma_z^2 + (hbar*t/(m*sigma_z))^2."""
        t = np.asarray(t, dtype=float)
        return self.sigma_z**2 + (HBAR * t / (M_ELECTRON * self.sigma_z)) ** 2

    def centroid(self, t):
        """Mean longitudinal position p0*t/m."""
        return self.p0 * np.asarray(t, dtype=float) / M_ELECTRON


@dataclass(frozen=True)
class PacketState:
    """Field-independent description of the incident packet."""

    quantum: PacketQuantumNumbers
    transverse: InitialTransverseState
    longitudinal: LongitudinalPacket

    def in_field(self, h_gauss):
        return RadiatingState(quantum=self.quantum,
                              breathing=breathing_params(self.transverse, h_gauss),
                              longitudinal=self.longitudinal)


@dataclass(frozen=True)
class RadiatingState:
    """Packet state inside the field; everything the sources and fields need."""

    quantum: PacketQuantumNumbers
    breathing: BreathingParams
    longitudinal: LongitudinalPacket

    @property
    def h_gauss(self):
        """Signed field recovered from the signed cyclotron frequency."""
        return self.breathing.omega_c * M_ELECTRON * C_LIGHT / E_CHARGE


def make_state(n, l, sigma0, sigma0_prime, h_gauss, p0=0.0, sigma_z=1.0e-5):
    """Convenience builder; lengths in cm, momenta in g cm/s, field in gauss."""
    packet = PacketState(
        quantum=PacketQuantumNumbers(n=n, l=l),
        transverse=InitialTransverseState(sigma0=sigma0, sigma0_prime=sigma0_prime),
        longitudinal=LongitudinalPacket(p0=p0, sigma_z=sigma_z),
    )
    return packet.in_field(h_gauss)
