"""Dual-wavelength collective-excitation model of a degenerate electron gas.

Closed-form pseudoforce field solutions, matter-wave dispersion, equation of
state, deterministic field and guiding-velocity trajectories, and dipole
interference maps, with a batch CLI for figure-grade data exports.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .scales import PhysicalScales, derive_scales
from .fields import (
    BoundaryConstants,
    DipoleConfig,
    Orbital,
    eval_dipole,
    eval_dipole_gradient,
    eval_dispersion,
    eval_monopole,
    eval_time_phase,
    eval_1d,
    eval_1d_gradient,
    make_orbital,
)

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND",
    "PhysicalScales",
    "derive_scales",
    "BoundaryConstants",
    "DipoleConfig",
    "Orbital",
    "eval_dipole",
    "eval_dipole_gradient",
    "eval_dispersion",
    "eval_monopole",
    "eval_time_phase",
    "eval_1d",
    "eval_1d_gradient",
    "make_orbital",
    "__version__",
]
