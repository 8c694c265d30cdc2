"""Circle inner products, Parseval sums, and shift operators.

Square-summable sequences are represented by the same finite coefficient
windows as everywhere else, so every identity here is exact at the
coefficient level: shifts are index relabelings and Parseval at r = 1 is a
finite sum of squared moduli.
"""

from __future__ import annotations

import numpy as np

from .poisson import BoundarySamples, circle_grid
from .series import LaurentCoefficients, eval_series_many

__all__ = [
    "circle_inner_product",
    "coefficient_inner_product",
    "parseval_sum",
    "shift_two_sided",
    "shift_one_sided",
    "multiplication_correspondence_check",
]


def circle_inner_product(s1: BoundarySamples, s2: BoundarySamples) -> complex:
    """Discrete circle inner product (1/m) sum_k s1(z_k) conj(s2(z_k)).

    The discrete form of (1/2pi) times the arclength integral of
    phi1 * conj(phi2); conjugate-symmetric and positive on nonzero
    band-limited data.
    """
    if s1.m != s2.m:
        raise ValueError(f"sample counts differ: {s1.m} != {s2.m}")
    return complex(np.sum(s1.values * np.conj(s2.values)) / s1.m)


def coefficient_inner_product(c1: LaurentCoefficients, c2: LaurentCoefficients) -> complex:
    """sum_n a1(n) conj(a2(n)) over the union of the two windows."""
    n_min = min(c1.n_min, c2.n_min)
    n_max = max(c1.n_max, c2.n_max)
    total = 0j
    for n in range(n_min, n_max + 1):
        total += c1.coefficient(n) * c2.coefficient(n).conjugate()
    return total


def parseval_sum(c: LaurentCoefficients, r: float) -> float:
    """sum_n |a(n)|^2 r^{2|n|} for 0 < r <= 1.

    At r = 1 this is the squared norm of the coefficient sequence, equal to
    the mean of |h|^2 over the circle for band-limited data.
    """
    if not 0.0 < r <= 1.0:
        raise ValueError(f"r must lie in (0, 1], got {r!r}")
    sq = c.coeffs.real**2 + c.coeffs.imag**2
    return float(np.sum(sq * r ** (2 * np.abs(c.indices))))


def shift_two_sided(c: LaurentCoefficients) -> LaurentCoefficients:
    """Forward shift a(n) -> a(n-1); the window translates up by one.

    Norm-preserving: it relabels indices.  The output window is padded so
    it still contains 0.
    """
    out_min = min(0, c.n_min + 1)
    out_max = c.n_max + 1
    vals = np.zeros(out_max - out_min + 1, dtype=np.complex128)
    start = (c.n_min + 1) - out_min
    vals[start : start + c.coeffs.shape[0]] = c.coeffs
    return LaurentCoefficients(out_min, out_max, vals)


def shift_one_sided(c: LaurentCoefficients) -> LaurentCoefficients:
    """Forward shift on one-sided sequences: a(n-1) at n >= 1, 0 at n = 0.

    Requires the input to be supported on n >= 0.  The output index-0 entry
    is always exactly 0: the range is a proper subspace.
    """
    if c.n_min < 0 and np.any(c.coeffs[: -c.n_min] != 0):
        raise ValueError("one-sided shift requires support on n >= 0")
    pos = c.coeffs[-c.n_min :]
    vals = np.zeros(c.n_max + 2, dtype=np.complex128)
    vals[1:] = pos
    return LaurentCoefficients(0, c.n_max + 1, vals)


def multiplication_correspondence_check(c: LaurentCoefficients, m: int) -> float:
    """Max grid discrepancy between the shifted series and z times the series.

    On the circle the forward shift corresponds to multiplication by z.
    Both sides are evaluated independently; the result should sit at
    roundoff (<= 1e-12 by contract).
    """
    if m <= 2 * (-c.n_min + c.n_max + 2):
        raise ValueError(
            f"need m > 2*(|n_min| + n_max + 2), got m={m} for window [{c.n_min}, {c.n_max}]"
        )
    grid = circle_grid(m)
    lhs = eval_series_many(shift_two_sided(c), grid)
    rhs = grid * eval_series_many(c, grid)
    return float(np.max(np.abs(lhs - rhs)))
