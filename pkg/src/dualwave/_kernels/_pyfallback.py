"""Pure-Python/numpy twins of the compiled kernels.

Signatures and arithmetic mirror dualwave._kernels._core so either backend
can serve the rest of the package.
"""

import math

import numpy as np


def verlet(x0, v0, qg, c1, c2, k1, k2, h, n_steps):
    """Velocity-Verlet integration of x'' = qg (c1 k1 sin(k1 x) + c2 k2 sin(k2 x)).

    The right-hand side is -(Q/Gamma) dPhi/dx for the two-cosine potential
    Phi(x) = c1 cos(k1 x) + c2 cos(k2 x) with qg = Q/Gamma.

    Returns (positions, velocities), arrays of length n_steps + 1.
    """
    xs = np.empty(n_steps + 1)
    vs = np.empty(n_steps + 1)
    sin = math.sin
    x = float(x0)
    v = float(v0)
    a = qg * (c1 * k1 * sin(k1 * x) + c2 * k2 * sin(k2 * x))
    xs[0] = x
    vs[0] = v
    half_h = 0.5 * h
    for i in range(1, n_steps + 1):
        v_half = v + half_h * a
        x = x + h * v_half
        a = qg * (c1 * k1 * sin(k1 * x) + c2 * k2 * sin(k2 * x))
        v = v_half + half_h * a
        xs[i] = x
        vs[i] = v
    return xs, vs


def _two_pole_sum(px, py, pz, a, k1, k2, cp1, cp2, cs1, cs2, q, sgn, want_grad):
    """Shared two-pole evaluation on broadcast coordinate arrays."""
    phi = np.zeros(np.broadcast(px, py, pz).shape, dtype=np.complex128)
    psi = np.zeros_like(phi)
    if want_grad:
        gphi = np.zeros(phi.shape + (3,), dtype=np.complex128)
        gpsi = np.zeros_like(gphi)
    for pole in (a, -a):
        dx = px - pole
        r = np.sqrt(dx * dx + py * py + pz * pz)
        e1 = np.exp(1j * (sgn * k1) * r)
        e2 = np.exp(1j * (sgn * k2) * r)
        inv_r = 1.0 / r
        phi += q * (cp1 * e1 + cp2 * e2) * inv_r
        psi += q * (cs1 * e1 + cs2 * e2) * inv_r
        if want_grad:
            # d/dr [exp(i k r)/r] = (i k r - 1) exp(i k r) / r^2, radial direction.
            f1 = (1j * (sgn * k1) * r - 1.0) * e1 * inv_r**3
            f2 = (1j * (sgn * k2) * r - 1.0) * e2 * inv_r**3
            tp = q * (cp1 * f1 + cp2 * f2)
            ts = q * (cs1 * f1 + cs2 * f2)
            for axis, comp in enumerate((dx, py, pz)):
                gphi[..., axis] += tp * comp
                gpsi[..., axis] += ts * comp
    if want_grad:
        return phi, psi, gphi, gpsi
    return phi, psi


def dipole_points(px, py, pz, a, k1, k2, cp1, cp2, cs1, cs2, q, sgn, want_grad):
    """Two-pole fields (and gradients) at scattered points.

    px, py, pz: 1-D coordinate arrays of equal length. Returns complex arrays
    (phi, psi) plus, when want_grad, (grad_phi, grad_psi) with shape (n, 3).
    """
    px = np.ascontiguousarray(px, dtype=np.float64)
    py = np.ascontiguousarray(py, dtype=np.float64)
    pz = np.ascontiguousarray(pz, dtype=np.float64)
    return _two_pole_sum(px, py, pz, a, k1, k2, cp1, cp2, cs1, cs2, q, sgn, want_grad)


def dipole_grid(xs, ys, z, a, k1, k2, cp1, cp2, cs1, cs2, q, sgn, want_grad):
    """Two-pole fields on the lattice ys x xs at height z.

    Returns arrays shaped (ny, nx); gradients shaped (ny, nx, 3).
    """
    px = np.asarray(xs, dtype=np.float64)[None, :]
    py = np.asarray(ys, dtype=np.float64)[:, None]
    pz = np.float64(z)
    return _two_pole_sum(px, py, pz, a, k1, k2, cp1, cp2, cs1, cs2, q, sgn, want_grad)
