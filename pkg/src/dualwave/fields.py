"""Closed-form collective-excitation fields.

Orbital wavenumbers and the dual-branch dispersion, the even 1D solution of
the coupled wave/potential system, and the outgoing spherical one- and
two-pole solutions with analytic gradients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import DomainError, SingularityError
from .scales import PhysicalScales


def eval_dispersion(k):
    """Normalized quasiparticle energy E(k) = k^2/2 + 1/(2 k^2).

    The k^2/2 branch is the free-particle dispersion; the 1/(2 k^2) term is
    the long-range electrostatic contribution. Minimum E = 1 at k = 1.
    """
    k = np.asarray(k, dtype=np.float64)
    if np.any(k <= 0.0):
        raise DomainError("wavenumber must be positive")
    e = 0.5 * k * k + 0.5 / (k * k)
    return float(e) if e.ndim == 0 else e


@dataclass(frozen=True)
class Orbital:
    """A fixed normalized excitation energy E > 1 and its two wavenumbers.

    k1 (collective, long-range) and k2 (single-electron) satisfy k1 k2 = 1
    and k2^2 - k1^2 = 2 alpha with alpha = sqrt(E^2 - 1).
    """

    E: float
    alpha: float
    k1: float
    k2: float


def make_orbital(E: float) -> Orbital:
    """Construct the orbital for normalized energy E.

    Raises DomainError for E <= 1: at E = 1 the two wavenumbers merge
    (alpha = 0 makes the closed-form solution singular) and E < 1 is the
    unsupported evanescent regime.
    """
    if not E > 1.0:
        raise DomainError(
            f"orbital energy must exceed the dispersion minimum E = 1, got {E}"
        )
    # (E-1)(E+1) avoids the cancellation in E^2 - 1 near E = 1; k1 = 1/k2
    # keeps the reciprocal relation exact to rounding for all E.
    alpha = math.sqrt((E - 1.0) * (E + 1.0))
    k2 = math.sqrt(E + alpha)
    k1 = 1.0 / k2
    return Orbital(E=float(E), alpha=alpha, k1=k1, k2=k2)


def orbital_from_physical(eps_ev: float, mu0_ev: float, scales: PhysicalScales) -> Orbital:
    """Orbital from an un-normalized excitation energy eps [eV] above mu0 [eV]."""
    return make_orbital((eps_ev - mu0_ev) / scales.E_p)


@dataclass(frozen=True)
class BoundaryConstants:
    """Field values at the origin; the slopes there are zero by construction."""

    phi0: float = 1.0
    psi0: float = 1.0


def eval_time_phase(eps, t):
    """Unit-modulus separable time factor exp(i eps t) in normalized units."""
    angle = np.asarray(eps, dtype=np.float64) * np.asarray(t, dtype=np.float64)
    phase = np.cos(angle) + 1j * np.sin(angle)
    return complex(phase) if phase.ndim == 0 else phase


def solution_coefficients(bc: BoundaryConstants, orb: Orbital):
    """Cosine/exponential coefficients of the closed-form solution.

    Returns (cphi1, cphi2, cpsi1, cpsi2): the potential is
    cphi1 f(k1 x) + cphi2 f(k2 x) and the wavefunction
    cpsi1 f(k1 x) + cpsi2 f(k2 x), for f = cos in 1D and f = exp(i k r)/r
    (times pole charge) in the spherical solutions.
    """
    inv_2a = 0.5 / orb.alpha
    k1sq = orb.k1 * orb.k1
    k2sq = orb.k2 * orb.k2
    cphi1 = (bc.psi0 + k2sq * bc.phi0) * inv_2a
    cphi2 = -(bc.psi0 + k1sq * bc.phi0) * inv_2a
    cpsi1 = -(bc.phi0 + k1sq * bc.psi0) * inv_2a
    cpsi2 = (bc.phi0 + k2sq * bc.psi0) * inv_2a
    return cphi1, cphi2, cpsi1, cpsi2


def eval_1d(x, bc: BoundaryConstants, orb: Orbital):
    """Even 1D closed-form solution (phi, psi) at normalized position x."""
    cphi1, cphi2, cpsi1, cpsi2 = solution_coefficients(bc, orb)
    x = np.asarray(x, dtype=np.float64)
    c1 = np.cos(orb.k1 * x)
    c2 = np.cos(orb.k2 * x)
    phi = cphi1 * c1 + cphi2 * c2
    psi = cpsi1 * c1 + cpsi2 * c2
    if x.ndim == 0:
        return float(phi), float(psi)
    return phi, psi


def eval_1d_gradient(x, bc: BoundaryConstants, orb: Orbital):
    """Analytic (dphi/dx, dpsi/dx) of the 1D solution."""
    cphi1, cphi2, cpsi1, cpsi2 = solution_coefficients(bc, orb)
    x = np.asarray(x, dtype=np.float64)
    s1 = -orb.k1 * np.sin(orb.k1 * x)
    s2 = -orb.k2 * np.sin(orb.k2 * x)
    dphi = cphi1 * s1 + cphi2 * s2
    dpsi = cpsi1 * s1 + cpsi2 * s2
    if x.ndim == 0:
        return float(dphi), float(dpsi)
    return dphi, dpsi


def eval_1d_curvature(x, bc: BoundaryConstants, orb: Orbital):
    """Analytic second derivatives (d2phi/dx2, d2psi/dx2) of the 1D solution."""
    cphi1, cphi2, cpsi1, cpsi2 = solution_coefficients(bc, orb)
    x = np.asarray(x, dtype=np.float64)
    k1sq = orb.k1 * orb.k1
    k2sq = orb.k2 * orb.k2
    c1 = -k1sq * np.cos(orb.k1 * x)
    c2 = -k2sq * np.cos(orb.k2 * x)
    ddphi = cphi1 * c1 + cphi2 * c2
    ddpsi = cpsi1 * c1 + cpsi2 * c2
    if x.ndim == 0:
        return float(ddphi), float(ddpsi)
    return ddphi, ddpsi


def eval_monopole(r, orb: Orbital, bc: BoundaryConstants, Q: float = 1.0, branch: int = 1):
    """Single-pole spherical solution (phi, psi), complex, at radius r > 0.

    Both fields are Q/r times a two-wavenumber exponential; branch = +1
    selects the outgoing exp(+i k r) solution, -1 its conjugate.
    """
    r = np.asarray(r, dtype=np.float64)
    if np.any(r <= 0.0):
        raise SingularityError("monopole fields are singular at r = 0; need r > 0")
    cphi1, cphi2, cpsi1, cpsi2 = solution_coefficients(bc, orb)
    e1 = np.exp(1j * (branch * orb.k1) * r) / r
    e2 = np.exp(1j * (branch * orb.k2) * r) / r
    phi = Q * (cphi1 * e1 + cphi2 * e2)
    psi = Q * (cpsi1 * e1 + cpsi2 * e2)
    if r.ndim == 0:
        return complex(phi), complex(psi)
    return phi, psi


@dataclass(frozen=True)
class DipoleConfig:
    """Two poles of charge Q on the x axis at x = +/- a, sharing one orbital.

    branch picks the sign of the exponent in the outgoing-wave factors. The
    boundary constants of the two-pole solution are fixed at phi0 = psi0 = 1.
    """

    orbital: Orbital
    a: float
    Q: float = 1.0
    branch: int = 1
    bc: BoundaryConstants = field(default=BoundaryConstants(1.0, 1.0), init=False, repr=False)

    def __post_init__(self):
        if self.a < 0:
            raise DomainError(f"pole half-spacing must be non-negative, got {self.a}")
        if self.Q == 0:
            raise DomainError("pole charge must be non-zero")
        if self.branch not in (1, -1):
            raise DomainError(f"branch must be +1 or -1, got {self.branch}")

    def poles(self):
        """The two pole positions as (x, y, z) triples."""
        return ((self.a, 0.0, 0.0), (-self.a, 0.0, 0.0))


def _kernel_args(cfg: DipoleConfig):
    cphi1, cphi2, cpsi1, cpsi2 = solution_coefficients(cfg.bc, cfg.orbital)
    return (
        cfg.a,
        cfg.orbital.k1,
        cfg.orbital.k2,
        complex(cphi1),
        complex(cphi2),
        complex(cpsi1),
        complex(cpsi2),
        float(cfg.Q),
        float(cfg.branch),
    )


def _check_poles(cfg: DipoleConfig, x, y, z):
    for px, py, pz in cfg.poles():
        r2 = (x - px) ** 2 + (y - py) ** 2 + (z - pz) ** 2
        if np.any(r2 < 1e-24):
            raise SingularityError("evaluation point coincides with a pole")


def eval_dipole(cfg: DipoleConfig, x, y, z=0.0):
    """Two-pole superposed fields (phi, psi), complex, at broadcastable coords."""
    x, y, z = np.broadcast_arrays(
        np.asarray(x, dtype=np.float64),
        np.asarray(y, dtype=np.float64),
        np.asarray(z, dtype=np.float64),
    )
    _check_poles(cfg, x, y, z)
    shape = x.shape
    phi, psi = _kernels.dipole_points(
        x.ravel(), y.ravel(), z.ravel(), *_kernel_args(cfg), False
    )
    if shape == ():
        return complex(phi[0]), complex(psi[0])
    return phi.reshape(shape), psi.reshape(shape)


def eval_dipole_gradient(cfg: DipoleConfig, x, y, z=0.0):
    """Analytic gradients (grad_phi, grad_psi) of the two-pole fields.

    Each gradient has a trailing axis of length 3 (d/dx, d/dy, d/dz).
    """
    x, y, z = np.broadcast_arrays(
        np.asarray(x, dtype=np.float64),
        np.asarray(y, dtype=np.float64),
        np.asarray(z, dtype=np.float64),
    )
    _check_poles(cfg, x, y, z)
    shape = x.shape
    _, _, gphi, gpsi = _kernels.dipole_points(
        x.ravel(), y.ravel(), z.ravel(), *_kernel_args(cfg), True
    )
    return gphi.reshape(shape + (3,)), gpsi.reshape(shape + (3,))


def eval_dipole_with_gradient(cfg: DipoleConfig, x, y, z=0.0):
    """Fields and gradients in one evaluation: (phi, psi, grad_phi, grad_psi)."""
    x, y, z = np.broadcast_arrays(
        np.asarray(x, dtype=np.float64),
        np.asarray(y, dtype=np.float64),
        np.asarray(z, dtype=np.float64),
    )
    _check_poles(cfg, x, y, z)
    shape = x.shape
    phi, psi, gphi, gpsi = _kernels.dipole_points(
        x.ravel(), y.ravel(), z.ravel(), *_kernel_args(cfg), True
    )
    return (
        phi.reshape(shape),
        psi.reshape(shape),
        gphi.reshape(shape + (3,)),
        gpsi.reshape(shape + (3,)),
    )
