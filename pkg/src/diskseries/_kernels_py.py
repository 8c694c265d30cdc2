"""Pure-NumPy implementations of the evaluation/quadrature kernels.

These mirror the compiled backend term for term: every per-point
accumulation runs in the same canonical order (index 0 first, then
|n| = 1, 2, ... with the nonnegative index before the negative one),
so the two backends agree to roundoff.
"""

import numpy as np


def eval_series_grid(coeffs, n_min, points):
    """Evaluate sum a(n) z^n (n >= 0) + sum a(n) conj(z)^{-n} (n < 0) at each point.

    ``coeffs`` holds a(n) for n ascending from ``n_min``.
    """
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    pts = np.asarray(points, dtype=np.complex128)
    n_max = n_min + coeffs.shape[0] - 1
    off = -n_min
    acc = np.full(pts.shape, coeffs[off])
    zp = np.ones_like(pts)
    zbp = np.ones_like(pts)
    zb = np.conj(pts)
    for k in range(1, max(n_max, off) + 1):
        zp = zp * pts
        zbp = zbp * zb
        if k <= n_max:
            acc = acc + coeffs[off + k] * zp
        if k <= off:
            acc = acc + coeffs[off - k] * zbp
    return acc


def extract_raw_coefficients(values, grid, n_max):
    """Discrete circle averages b(n) = (1/m) sum_k values[k] grid[k]^{-n}.

    Returns b(n) for n ascending over [-n_max, n_max].  Plain sums; powers
    of the grid points are built up multiplicatively.
    """
    values = np.asarray(values, dtype=np.complex128)
    grid = np.asarray(grid, dtype=np.complex128)
    m = values.shape[0]
    gbar = np.conj(grid)
    out = np.empty(2 * n_max + 1, dtype=np.complex128)
    out[n_max] = values.sum() / m
    pos = np.ones_like(grid)  # grid^j
    neg = np.ones_like(grid)  # conj(grid)^j, i.e. grid^{-j} on the circle
    for j in range(1, n_max + 1):
        pos = pos * grid
        neg = neg * gbar
        out[n_max + j] = (values * neg).sum() / m
        out[n_max - j] = (values * pos).sum() / m
    return out


def poisson_extend_grid(values, grid, zetas):
    """Trapezoidal Poisson integral of boundary ``values`` at each target zeta.

    Computes (1/m) sum_k values[k] (1 - |zeta|^2) / |grid[k] - zeta|^2,
    i.e. the 2*pi/m-weighted sum against the Poisson kernel.
    """
    values = np.asarray(values, dtype=np.complex128)
    grid = np.asarray(grid, dtype=np.complex128)
    zetas = np.asarray(zetas, dtype=np.complex128)
    m = values.shape[0]
    out = np.empty(zetas.shape, dtype=np.complex128)
    for i, zeta in enumerate(zetas):
        num = 1.0 - (zeta.real * zeta.real + zeta.imag * zeta.imag)
        d = grid - zeta
        den = d.real * d.real + d.imag * d.imag
        out[i] = (values * (num / den)).sum() / m
    return out


def polyval_grid(coeffs, points):
    """Evaluate a polynomial (coefficients ascending) at each point by Horner."""
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    pts = np.asarray(points, dtype=np.complex128)
    acc = np.full(pts.shape, coeffs[-1])
    for j in range(coeffs.shape[0] - 2, -1, -1):
        acc = acc * pts + coeffs[j]
    return acc
