# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: sequential Verlet stepping and two-pole field fills.

Twin of dualwave._kernels._pyfallback; keep formulas structurally identical
so the backends agree to rounding.
"""

import numpy as np

from libc.math cimport cos, sin, sqrt


def verlet(double x0, double v0, double qg, double c1, double c2,
           double k1, double k2, double h, Py_ssize_t n_steps):
    """Velocity-Verlet integration of x'' = qg (c1 k1 sin(k1 x) + c2 k2 sin(k2 x)).

    Returns (positions, velocities), arrays of length n_steps + 1.
    """
    xs_arr = np.empty(n_steps + 1)
    vs_arr = np.empty(n_steps + 1)
    cdef double[::1] xs = xs_arr
    cdef double[::1] vs = vs_arr
    cdef double x = x0
    cdef double v = v0
    cdef double half_h = 0.5 * h
    cdef double a = qg * (c1 * k1 * sin(k1 * x) + c2 * k2 * sin(k2 * x))
    cdef double v_half
    cdef Py_ssize_t i
    xs[0] = x
    vs[0] = v
    with nogil:
        for i in range(1, n_steps + 1):
            v_half = v + half_h * a
            x = x + h * v_half
            a = qg * (c1 * k1 * sin(k1 * x) + c2 * k2 * sin(k2 * x))
            v = v_half + half_h * a
            xs[i] = x
            vs[i] = v
    return xs_arr, vs_arr


cdef inline void _accumulate_point(double px, double py, double pz,
                                   double a, double k1, double k2,
                                   double complex cp1, double complex cp2,
                                   double complex cs1, double complex cs2,
                                   double q, double sgn, bint want_grad,
                                   double complex *out) noexcept nogil:
    """Add both pole contributions at one point into out[0:8].

    Layout: phi, psi, gphi_x, gphi_y, gphi_z, gpsi_x, gpsi_y, gpsi_z.
    """
    cdef double dx, r, inv_r, ph1, ph2
    cdef double complex e1, e2, f1, f2, tp, ts
    cdef int p
    cdef double pole
    for p in range(2):
        pole = a if p == 0 else -a
        dx = px - pole
        r = sqrt(dx * dx + py * py + pz * pz)
        inv_r = 1.0 / r
        ph1 = sgn * k1 * r
        ph2 = sgn * k2 * r
        e1 = cos(ph1) + 1j * sin(ph1)
        e2 = cos(ph2) + 1j * sin(ph2)
        out[0] = out[0] + q * (cp1 * e1 + cp2 * e2) * inv_r
        out[1] = out[1] + q * (cs1 * e1 + cs2 * e2) * inv_r
        if want_grad:
            f1 = (1j * (sgn * k1) * r - 1.0) * e1 * inv_r * inv_r * inv_r
            f2 = (1j * (sgn * k2) * r - 1.0) * e2 * inv_r * inv_r * inv_r
            tp = q * (cp1 * f1 + cp2 * f2)
            ts = q * (cs1 * f1 + cs2 * f2)
            out[2] = out[2] + tp * dx
            out[3] = out[3] + tp * py
            out[4] = out[4] + tp * pz
            out[5] = out[5] + ts * dx
            out[6] = out[6] + ts * py
            out[7] = out[7] + ts * pz


def dipole_points(px, py, pz, double a, double k1, double k2,
                  double complex cp1, double complex cp2,
                  double complex cs1, double complex cs2,
                  double q, double sgn, bint want_grad):
    """Two-pole fields (and gradients) at scattered points; see _pyfallback."""
    cdef double[::1] xv = np.ascontiguousarray(px, dtype=np.float64)
    cdef double[::1] yv = np.ascontiguousarray(py, dtype=np.float64)
    cdef double[::1] zv = np.ascontiguousarray(pz, dtype=np.float64)
    cdef Py_ssize_t n = xv.shape[0]
    phi_arr = np.zeros(n, dtype=np.complex128)
    psi_arr = np.zeros(n, dtype=np.complex128)
    cdef double complex[::1] phi = phi_arr
    cdef double complex[::1] psi = psi_arr
    cdef double complex[:, ::1] gphi
    cdef double complex[:, ::1] gpsi
    cdef double complex buf[8]
    cdef Py_ssize_t i
    cdef int j
    if want_grad:
        gphi_arr = np.zeros((n, 3), dtype=np.complex128)
        gpsi_arr = np.zeros((n, 3), dtype=np.complex128)
        gphi = gphi_arr
        gpsi = gpsi_arr
        with nogil:
            for i in range(n):
                for j in range(8):
                    buf[j] = 0
                _accumulate_point(xv[i], yv[i], zv[i], a, k1, k2,
                                  cp1, cp2, cs1, cs2, q, sgn, 1, buf)
                phi[i] = buf[0]
                psi[i] = buf[1]
                gphi[i, 0] = buf[2]
                gphi[i, 1] = buf[3]
                gphi[i, 2] = buf[4]
                gpsi[i, 0] = buf[5]
                gpsi[i, 1] = buf[6]
                gpsi[i, 2] = buf[7]
        return phi_arr, psi_arr, gphi_arr, gpsi_arr
    with nogil:
        for i in range(n):
            for j in range(2):
                buf[j] = 0
            _accumulate_point(xv[i], yv[i], zv[i], a, k1, k2,
                              cp1, cp2, cs1, cs2, q, sgn, 0, buf)
            phi[i] = buf[0]
            psi[i] = buf[1]
    return phi_arr, psi_arr


def dipole_grid(xs, ys, double z, double a, double k1, double k2,
                double complex cp1, double complex cp2,
                double complex cs1, double complex cs2,
                double q, double sgn, bint want_grad):
    """Two-pole fields on the lattice ys x xs at height z; see _pyfallback."""
    cdef double[::1] xv = np.ascontiguousarray(xs, dtype=np.float64)
    cdef double[::1] yv = np.ascontiguousarray(ys, dtype=np.float64)
    cdef Py_ssize_t nx = xv.shape[0]
    cdef Py_ssize_t ny = yv.shape[0]
    phi_arr = np.zeros((ny, nx), dtype=np.complex128)
    psi_arr = np.zeros((ny, nx), dtype=np.complex128)
    cdef double complex[:, ::1] phi = phi_arr
    cdef double complex[:, ::1] psi = psi_arr
    cdef double complex[:, :, ::1] gphi
    cdef double complex[:, :, ::1] gpsi
    cdef double complex buf[8]
    cdef Py_ssize_t i, k
    cdef int j
    if want_grad:
        gphi_arr = np.zeros((ny, nx, 3), dtype=np.complex128)
        gpsi_arr = np.zeros((ny, nx, 3), dtype=np.complex128)
        gphi = gphi_arr
        gpsi = gpsi_arr
        with nogil:
            for i in range(ny):
                for k in range(nx):
                    for j in range(8):
                        buf[j] = 0
                    _accumulate_point(xv[k], yv[i], z, a, k1, k2,
                                      cp1, cp2, cs1, cs2, q, sgn, 1, buf)
                    phi[i, k] = buf[0]
                    psi[i, k] = buf[1]
                    gphi[i, k, 0] = buf[2]
                    gphi[i, k, 1] = buf[3]
                    gphi[i, k, 2] = buf[4]
                    gpsi[i, k, 0] = buf[5]
                    gpsi[i, k, 1] = buf[6]
                    gpsi[i, k, 2] = buf[7]
        return phi_arr, psi_arr, gphi_arr, gpsi_arr
    with nogil:
        for i in range(ny):
            for k in range(nx):
                for j in range(2):
                    buf[j] = 0
                _accumulate_point(xv[k], yv[i], z, a, k1, k2,
                                  cp1, cp2, cs1, cs2, q, sgn, 0, buf)
                phi[i, k] = buf[0]
                psi[i, k] = buf[1]
    return phi_arr, psi_arr
