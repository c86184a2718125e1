"""Isothermal equation of state of the arbitrary-degeneracy electron gas.

Fermi-Dirac density and pressure integrals over the full degeneracy range,
plus the inversion density -> chemical potential. Public units: eV, K,
cm^-3 and erg/cm^3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.integrate import quad
from scipy.special import expit

from .constants import ERG_PER_EV, HBAR, K_BOLTZMANN, M_ELECTRON
from .errors import ConvergenceError, DomainError

# Occupancies below exp(-_TAIL_DECADES) are treated as pure exponential tail.
_KNEE_WIDTH = 40.0
_TAIL_SPAN = 200.0

_DENSITY_PREFACTOR = math.sqrt(2.0) * M_ELECTRON**1.5 / (math.pi**2 * HBAR**3)
_PRESSURE_PREFACTOR = 2.0 ** 1.5 * M_ELECTRON**1.5 / (3.0 * math.pi**2 * HBAR**3)


@dataclass(frozen=True)
class EosPoint:
    """One point on the isothermal equation-of-state surface."""

    mu: float  # chemical potential [eV]
    T: float  # temperature [K]
    n_e: float  # number density [cm^-3]
    P_e: float  # pressure [erg/cm^3]


def _fd_integral(power: float, mu_erg: float, T: float) -> float:
    """Integral of eps^power / (exp(beta(eps-mu)) + 1) over eps in [0, inf), CGS.

    The integrand has a knee of width k_B T at the Fermi surface; the range is
    split there and the semi-infinite tail is mapped onto a decaying
    exponential before adaptive Gauss-Kronrod refinement.
    """
    beta = 1.0 / (K_BOLTZMANN * T)

    def occupancy(eps):
        return expit(-beta * (eps - mu_erg))

    knee = max(mu_erg, 0.0) + _KNEE_WIDTH / beta
    head, _ = quad(
        lambda e: e**power * occupancy(e), 0.0, knee, epsabs=0.0, epsrel=1e-11, limit=200
    )
    # Tail substitution u = beta (eps - knee): integrand decays like exp(-u).
    tail, _ = quad(
        lambda u: (knee + u / beta) ** power * occupancy(knee + u / beta) / beta,
        0.0,
        _TAIL_SPAN,
        epsabs=0.0,
        epsrel=1e-11,
        limit=200,
    )
    return head + tail


def density_of_mu(mu: float, T: float) -> float:
    """Electron number density [cm^-3] at chemical potential mu [eV] and T [K]."""
    if T <= 0:
        raise DomainError(f"temperature must be positive, got {T}")
    return _DENSITY_PREFACTOR * _fd_integral(0.5, mu * ERG_PER_EV, T)


def pressure_of_mu(mu: float, T: float) -> float:
    """Electron pressure [erg/cm^3] at chemical potential mu [eV] and T [K]."""
    if T <= 0:
        raise DomainError(f"temperature must be positive, got {T}")
    return _PRESSURE_PREFACTOR * _fd_integral(1.5, mu * ERG_PER_EV, T)


def eos_point(mu: float, T: float) -> EosPoint:
    """Evaluate both equation-of-state branches at (mu, T)."""
    return EosPoint(mu=mu, T=T, n_e=density_of_mu(mu, T), P_e=pressure_of_mu(mu, T))


# -- analytic limits ------------------------------------------------------


def fermi_energy(n0: float) -> float:
    """Zero-temperature chemical potential [eV] at density n0 [cm^-3]."""
    if n0 <= 0:
        raise DomainError(f"density must be positive, got {n0}")
    return (HBAR**2 / (2.0 * M_ELECTRON)) * (3.0 * math.pi**2 * n0) ** (2.0 / 3.0) / ERG_PER_EV


def classical_mu(n0: float, T: float) -> float:
    """Nondegenerate (Maxwell-Boltzmann) chemical potential [eV]."""
    if n0 <= 0 or T <= 0:
        raise DomainError("classical limit needs n0 > 0 and T > 0")
    kt = K_BOLTZMANN * T
    lam3 = (2.0 * math.pi * HBAR**2 / (M_ELECTRON * kt)) ** 1.5
    return kt * math.log(0.5 * n0 * lam3) / ERG_PER_EV


def classical_density(mu: float, T: float) -> float:
    """Maxwell-Boltzmann density [cm^-3] for mu [eV], T [K]."""
    kt = K_BOLTZMANN * T
    lam3 = (2.0 * math.pi * HBAR**2 / (M_ELECTRON * kt)) ** 1.5
    return 2.0 / lam3 * math.exp(mu * ERG_PER_EV / kt)


def degenerate_density(mu: float) -> float:
    """T = 0 step-occupancy density [cm^-3] for mu [eV] > 0."""
    if mu <= 0:
        raise DomainError("degenerate limit needs mu > 0")
    mu_erg = mu * ERG_PER_EV
    return (2.0 * M_ELECTRON * mu_erg) ** 1.5 / (3.0 * math.pi**2 * HBAR**3)


def mu_of_density(n0: float, T: float) -> float:
    """Invert density_of_mu: chemical potential [eV] with n(mu) = n0 [cm^-3].

    Bracketed solve: bisection narrows the bracket, then a bracket-guarded
    secant polishes the root. Raises ConvergenceError (with the last bracket)
    if the bracket cannot be established or the iteration stalls.
    """
    if n0 <= 0:
        raise DomainError(f"density must be positive, got {n0}")
    if T <= 0:
        raise DomainError(f"temperature must be positive, got {T}")

    kt_ev = K_BOLTZMANN * T / ERG_PER_EV
    e_f = fermi_energy(n0)
    lo = classical_mu(n0, T) - 5.0 * kt_ev
    hi = e_f + 5.0 * kt_ev

    def residual(mu):
        return density_of_mu(mu, T) / n0 - 1.0

    f_lo = residual(lo)
    f_hi = residual(hi)
    for _ in range(60):
        if f_lo < 0.0 < f_hi:
            break
        span = hi - lo
        if f_lo > 0.0:
            lo -= span
            f_lo = residual(lo)
        if f_hi < 0.0:
            hi += span
            f_hi = residual(hi)
    else:
        raise ConvergenceError(
            f"could not bracket mu for n0={n0}, T={T}", bracket=(lo, hi)
        )

    # Bisection down to a narrow bracket.
    width_target = 1e-3 * max(kt_ev, e_f)
    while hi - lo > width_target:
        mid = 0.5 * (lo + hi)
        f_mid = residual(mid)
        if f_mid < 0.0:
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid

    # Safeguarded secant: steps falling outside the bracket fall back to
    # bisection; the bracket is maintained throughout.
    a, fa, b, fb = lo, f_lo, hi, f_hi
    x, fx = (a, fa) if abs(fa) < abs(fb) else (b, fb)
    x_prev, f_prev = (b, fb) if x == a else (a, fa)
    for _ in range(100):
        if abs(fx) <= 1e-10:
            return x
        denom = fx - f_prev
        if denom != 0.0:
            x_new = x - fx * (x - x_prev) / denom
        else:
            x_new = 0.5 * (a + b)
        if not (a < x_new < b):
            x_new = 0.5 * (a + b)
        f_new = residual(x_new)
        if f_new < 0.0:
            a, fa = x_new, f_new
        else:
            b, fb = x_new, f_new
        x_prev, f_prev = x, fx
        x, fx = x_new, f_new
    if abs(fx) <= 1e-8:
        return x
    raise ConvergenceError(
        f"mu iteration stalled for n0={n0}, T={T} (residual {fx:.3e})",
        bracket=(a, b),
    )
