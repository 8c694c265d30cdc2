# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled evaluation/quadrature kernels.

Same contracts and the same per-point accumulation order as
``diskseries._kernels_py``; chosen at import time by ``diskseries._backend``.
"""

import numpy as np


def eval_series_grid(coeffs, n_min, points):
    cdef const double complex[::1] cv = np.ascontiguousarray(coeffs, dtype=np.complex128)
    cdef const double complex[::1] pv = np.ascontiguousarray(points, dtype=np.complex128)
    cdef Py_ssize_t off = -n_min
    cdef Py_ssize_t nmax = cv.shape[0] - 1 - off
    cdef Py_ssize_t kmax = nmax if nmax > off else off
    cdef Py_ssize_t npts = pv.shape[0]
    out = np.empty(npts, dtype=np.complex128)
    cdef double complex[::1] ov = out
    cdef Py_ssize_t i, k
    cdef double complex z, zb, zp, zbp, acc
    for i in range(npts):
        z = pv[i]
        zb = z.conjugate()
        acc = cv[off]
        zp = 1.0
        zbp = 1.0
        for k in range(1, kmax + 1):
            zp = zp * z
            zbp = zbp * zb
            if k <= nmax:
                acc = acc + cv[off + k] * zp
            if k <= off:
                acc = acc + cv[off - k] * zbp
        ov[i] = acc
    return out


def extract_raw_coefficients(values, grid, n_max):
    cdef const double complex[::1] hv = np.ascontiguousarray(values, dtype=np.complex128)
    cdef const double complex[::1] gv = np.ascontiguousarray(grid, dtype=np.complex128)
    cdef Py_ssize_t m = hv.shape[0]
    cdef Py_ssize_t nmax = n_max
    out = np.empty(2 * nmax + 1, dtype=np.complex128)
    cdef double complex[::1] ov = out
    pos_arr = np.ones(m, dtype=np.complex128)
    neg_arr = np.ones(m, dtype=np.complex128)
    cdef double complex[::1] pos = pos_arr
    cdef double complex[::1] neg = neg_arr
    cdef Py_ssize_t j, k
    cdef double complex sp, sn
    sp = 0
    for k in range(m):
        sp = sp + hv[k]
    ov[nmax] = sp / m
    for j in range(1, nmax + 1):
        sp = 0
        sn = 0
        for k in range(m):
            pos[k] = pos[k] * gv[k]
            neg[k] = neg[k] * gv[k].conjugate()
            sn = sn + hv[k] * neg[k]
            sp = sp + hv[k] * pos[k]
        ov[nmax + j] = sn / m
        ov[nmax - j] = sp / m
    return out


def poisson_extend_grid(values, grid, zetas):
    cdef const double complex[::1] hv = np.ascontiguousarray(values, dtype=np.complex128)
    cdef const double complex[::1] gv = np.ascontiguousarray(grid, dtype=np.complex128)
    cdef const double complex[::1] zv = np.ascontiguousarray(zetas, dtype=np.complex128)
    cdef Py_ssize_t m = hv.shape[0]
    cdef Py_ssize_t nz = zv.shape[0]
    out = np.empty(nz, dtype=np.complex128)
    cdef double complex[::1] ov = out
    cdef Py_ssize_t i, k
    cdef double complex zeta, d, acc
    cdef double num, den
    for i in range(nz):
        zeta = zv[i]
        num = 1.0 - (zeta.real * zeta.real + zeta.imag * zeta.imag)
        acc = 0
        for k in range(m):
            d = gv[k] - zeta
            den = d.real * d.real + d.imag * d.imag
            acc = acc + hv[k] * (num / den)
        ov[i] = acc / m
    return out


def polyval_grid(coeffs, points):
    cdef const double complex[::1] cv = np.ascontiguousarray(coeffs, dtype=np.complex128)
    cdef const double complex[::1] pv = np.ascontiguousarray(points, dtype=np.complex128)
    cdef Py_ssize_t deg = cv.shape[0] - 1
    cdef Py_ssize_t npts = pv.shape[0]
    out = np.empty(npts, dtype=np.complex128)
    cdef double complex[::1] ov = out
    cdef Py_ssize_t i, j
    cdef double complex z, acc
    for i in range(npts):
        z = pv[i]
        acc = cv[deg]
        for j in range(deg - 1, -1, -1):
            acc = acc * z + cv[j]
        ov[i] = acc
    return out
