"""Plasmon unit system: laboratory inputs to normalized units and back.

All internal evaluation is in Gaussian CGS; the public surface speaks
cm^-3, K, eV, nm, rad/s and cm/s.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import CM_PER_NM, ERG_PER_EV, HBAR, M_ELECTRON, E_CHARGE
from .errors import DomainError


@dataclass(frozen=True)
class PhysicalScales:
    """Equilibrium state plus the derived plasmon units.

    Attributes:
        n0: equilibrium electron number density [cm^-3]
        T: temperature [K]
        E_p: plasmon energy [eV]
        omega_p: plasmon frequency [rad/s]
        k_p: plasmon wavenumber [cm^-1]
        l_p: plasmon length [nm]
        v_p: plasmon speed [cm/s]
    """

    n0: float
    T: float
    E_p: float
    omega_p: float
    k_p: float
    l_p: float
    v_p: float

    # -- length ----------------------------------------------------------
    def length_to_plasmon(self, x_nm):
        """nm -> plasmon lengths."""
        return x_nm / self.l_p

    def length_from_plasmon(self, x):
        """plasmon lengths -> nm."""
        return x * self.l_p

    # -- energy ----------------------------------------------------------
    def energy_to_plasmon(self, e_ev):
        """eV -> plasmon energies."""
        return e_ev / self.E_p

    def energy_from_plasmon(self, e):
        """plasmon energies -> eV."""
        return e * self.E_p

    # -- time ------------------------------------------------------------
    def time_to_plasmon(self, t_s):
        """seconds -> inverse plasmon frequencies."""
        return t_s * self.omega_p

    def time_from_plasmon(self, t):
        """inverse plasmon frequencies -> seconds."""
        return t / self.omega_p

    # -- speed -----------------------------------------------------------
    def speed_to_plasmon(self, v_cm_s):
        """cm/s -> plasmon speeds."""
        return v_cm_s / self.v_p

    def speed_from_plasmon(self, v):
        """plasmon speeds -> cm/s."""
        return v * self.v_p


def derive_scales(n0: float, T: float = 0.0) -> PhysicalScales:
    """Build the plasmon unit system for a given equilibrium density.

    Args:
        n0: equilibrium electron number density [cm^-3], must be positive.
        T: electron temperature [K], must be non-negative.

    The plasmon frequency is the Gaussian-unit omega_p = sqrt(4 pi n0 e^2 / m),
    the plasmon energy is hbar * omega_p, the plasmon wavenumber is
    k_p = sqrt(2 m E_p) / hbar, and l_p = 1/k_p, v_p = (hbar/m) k_p.
    """
    if n0 <= 0:
        raise DomainError(f"electron number density must be positive, got {n0}")
    if T < 0:
        raise DomainError(f"temperature must be non-negative, got {T}")

    omega_p = math.sqrt(4.0 * math.pi * n0 * E_CHARGE**2 / M_ELECTRON)
    e_p_erg = HBAR * omega_p
    k_p = math.sqrt(2.0 * M_ELECTRON * e_p_erg) / HBAR
    v_p = HBAR * k_p / M_ELECTRON
    return PhysicalScales(
        n0=n0,
        T=T,
        E_p=e_p_erg / ERG_PER_EV,
        omega_p=omega_p,
        k_p=k_p,
        l_p=1.0 / k_p / CM_PER_NM,
        v_p=v_p,
    )
