"""Boundary data on the unit circle and the Poisson kernel.

Quadrature is the uniform trapezoidal rule on equispaced nodes throughout:
exact for trigonometric polynomials of degree below the node count,
spectrally accurate for smooth data.  Coefficient extraction is specified
as the plain discrete sum (1/m) sum_k h(z_k) z_k^{-n}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .series import (
    LaurentCoefficients,
    as_circle_point,
    as_interior_point,
    eval_series_many,
)

__all__ = [
    "BoundarySamples",
    "MixedPolynomial",
    "RadiusRecovery",
    "circle_grid",
    "coefficients_from_boundary",
    "coefficients_at_radius",
    "poisson_kernel",
    "poisson_kernel_series",
    "poisson_extend",
    "poisson_extend_many",
    "extension_resolution_flag",
    "kernel_mass",
    "kernel_decay_profile",
    "harmonic_projection",
    "as_mixed_polynomial",
]

TWO_PI = 2.0 * math.pi

# Threshold below which recovering a(n) = b(n)/r^{|n|} is flagged as
# ill-conditioned.
RADIUS_CONDITION_FLOOR = 1e-12


def circle_grid(m: int) -> np.ndarray:
    """The m-th roots of unity exp(2*pi*i*k/m), k = 0..m-1, unit modulus."""
    if m < 1:
        raise ValueError(f"grid size must be >= 1, got {m}")
    g = np.exp(2j * np.pi * np.arange(m) / m)
    return g / np.abs(g)


@dataclass(frozen=True, eq=False)
class BoundarySamples:
    """Values of a circle function at the m equispaced nodes exp(2*pi*i*k/m)."""

    m: int
    values: np.ndarray

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"sample count must be >= 1, got {self.m}")
        arr = np.array(self.values, dtype=np.complex128)
        if arr.ndim != 1 or arr.shape[0] != self.m:
            raise ValueError(f"expected exactly {self.m} sample values")
        if not np.all(np.isfinite(arr)):
            raise ValueError("sample values must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @classmethod
    def from_function(cls, fn, m: int):
        """Sample a vectorized callable on the m-point grid."""
        grid = circle_grid(m)
        vals = np.asarray(fn(grid), dtype=np.complex128)
        if vals.shape != grid.shape:
            raise ValueError("boundary function must return one value per node")
        return cls(m, vals)

    @classmethod
    def from_coefficients(cls, c: LaurentCoefficients, m: int):
        """Boundary trace of a coefficient window, sampled on the m-point grid."""
        return cls(m, eval_series_many(c, circle_grid(m)))


def coefficients_from_boundary(s: BoundarySamples, n_max: int) -> LaurentCoefficients:
    """Recover a(n), |n| <= n_max, from boundary samples by circle quadrature.

    The discrete average (1/m) sum_k h(z_k) z_k^{-n} equals the true
    coefficient (to roundoff) whenever the samples come from a series
    supported inside [-n_max, n_max]; requires m > 2*n_max so no aliasing
    can occur.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    if s.m <= 2 * n_max:
        raise ValueError(f"need m > 2*n_max to avoid aliasing, got m={s.m}, n_max={n_max}")
    raw = kernels.extract_raw_coefficients(s.values, circle_grid(s.m), n_max)
    return LaurentCoefficients(-n_max, n_max, raw)


@dataclass(frozen=True)
class RadiusRecovery:
    """Coefficients recovered from samples at radius r, with a conditioning flag."""

    coefficients: LaurentCoefficients
    ill_conditioned: bool


def coefficients_at_radius(s_r: BoundarySamples, r: float, n_max: int) -> RadiusRecovery:
    """Recover a(n) from samples of h(r z) on the circle.

    The quadrature yields b(n) = a(n) r^{|n|}; dividing by r^{|n|} restores
    a(n).  When r^{n_max} drops below 1e-12 the division is flagged as
    ill-conditioned in the result.
    """
    if not 0.0 < r < 1.0:
        raise ValueError(f"r must lie in (0, 1), got {r!r}")
    if s_r.m <= 2 * n_max:
        raise ValueError(f"need m > 2*n_max to avoid aliasing, got m={s_r.m}, n_max={n_max}")
    raw = kernels.extract_raw_coefficients(s_r.values, circle_grid(s_r.m), n_max)
    ns = np.abs(np.arange(-n_max, n_max + 1))
    coeffs = LaurentCoefficients(-n_max, n_max, np.asarray(raw) / r**ns)
    return RadiusRecovery(coeffs, bool(r**n_max < RADIUS_CONDITION_FLOOR))


def poisson_kernel(z, zeta) -> float:
    """Closed-form Poisson kernel (1/2pi)(1 - |zeta|^2)/|z - zeta|^2, z on the circle."""
    zv = as_circle_point(z)
    zetav = as_interior_point(zeta)
    d = zv - zetav
    num = 1.0 - (zetav.real * zetav.real + zetav.imag * zetav.imag)
    den = d.real * d.real + d.imag * d.imag
    return num / den / TWO_PI


def _kernel_row(grid: np.ndarray, zetav: complex) -> np.ndarray:
    """Poisson kernel values P(z_k, zeta) over a grid array."""
    num = 1.0 - (zetav.real * zetav.real + zetav.imag * zetav.imag)
    d = grid - zetav
    den = d.real * d.real + d.imag * d.imag
    return num / den / TWO_PI


def poisson_kernel_series(z, zeta, n_max: int) -> float:
    """Truncated series form of the Poisson kernel.

    (1/2pi) (sum_{n=0}^{n_max} conj(z)^n zeta^n + sum_{n=1}^{n_max} z^n conj(zeta)^n),
    accumulated in the canonical order.  The imaginary residue must stay
    below 1e-12 (a conjugation-bug detector) before it is discarded;
    converges to the closed form at the geometric rate |zeta|^{n_max}.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    zv = as_circle_point(z)
    zetav = as_interior_point(zeta)
    t_pos = 1.0 + 0j  # (conj(z) zeta)^k
    t_neg = 1.0 + 0j  # (z conj(zeta))^k
    f_pos = zv.conjugate() * zetav
    f_neg = zv * zetav.conjugate()
    acc = 1.0 + 0j
    for _ in range(n_max):
        t_pos = t_pos * f_pos
        t_neg = t_neg * f_neg
        acc = acc + t_pos
        acc = acc + t_neg
    val = acc / TWO_PI
    if abs(val.imag) > 1e-12:
        raise ArithmeticError(
            f"imaginary residue {val.imag!r} exceeds 1e-12; conjugation error"
        )
    return val.real


def poisson_extend(s: BoundarySamples, zeta) -> complex:
    """Discrete Poisson integral of the boundary samples at one interior point.

    Trapezoidal quadrature of the integral of h(z) P(z, zeta) |dz|; exact to
    roundoff for band-limited data with indices inside (-m/2, m/2).  Near
    the boundary use :func:`extension_resolution_flag` to detect when the
    kernel is too concentrated for the grid.
    """
    zetav = as_interior_point(zeta)
    out = kernels.poisson_extend_grid(
        s.values, circle_grid(s.m), np.array([zetav], dtype=np.complex128)
    )
    return complex(out[0])


def poisson_extend_many(s: BoundarySamples, zetas) -> np.ndarray:
    """Vectorized :func:`poisson_extend` over an array of interior points."""
    z = np.asarray(zetas, dtype=np.complex128)
    if z.size and float(np.max(np.abs(z))) >= 1.0:
        raise ValueError("all target points must satisfy |zeta| < 1")
    flat = kernels.poisson_extend_grid(s.values, circle_grid(s.m), z.ravel())
    return np.asarray(flat).reshape(z.shape)


def extension_resolution_flag(m: int, zeta) -> bool:
    """True when zeta sits within ~10 grid spacings of the circle.

    There the kernel mass concentrates on too few nodes for the quadrature
    to be trustworthy; honest error reporting beats silent inaccuracy.
    """
    zetav = as_interior_point(zeta)
    return bool((1.0 - abs(zetav)) < TWO_PI * 10.0 / m)


def kernel_mass(zeta, m: int) -> float:
    """Discrete mass sum_k P(z_k, zeta) (2*pi/m); approximates 1."""
    if m < 4:
        raise ValueError(f"need m >= 4, got {m}")
    zetav = as_interior_point(zeta)
    row = _kernel_row(circle_grid(m), zetav)
    return float(row.sum() * (TWO_PI / m))


def kernel_decay_profile(w, rho: float, radii, m: int = 2048) -> list[float]:
    """Max of P(z, r*w) over grid points z with |z - w| >= rho, per radius.

    As r -> 1 the values must decay to 0: the kernel concentrates at w and
    vanishes uniformly away from it.  Radii may include 0 and must be < 1.
    """
    if not 0.0 < rho <= 2.0:
        raise ValueError(f"rho must lie in (0, 2], got {rho!r}")
    wv = as_circle_point(w)
    grid = circle_grid(m)
    mask = np.abs(grid - wv) >= rho
    if not mask.any():
        raise ValueError(f"no grid point satisfies |z - w| >= {rho!r}")
    far = grid[mask]
    out = []
    for r in radii:
        if not 0.0 <= r < 1.0:
            raise ValueError(f"radii must lie in [0, 1), got {r!r}")
        out.append(float(np.max(_kernel_row(far, r * wv))))
    return out


@dataclass(frozen=True, eq=False)
class MixedPolynomial:
    """A polynomial in z and conj(z): finitely many terms c * z^j * conj(z)^k.

    ``terms`` is kept sorted by (j, k); duplicate monomials passed to the
    constructor are merged by addition.
    """

    terms: tuple

    def __post_init__(self):
        merged = {}
        for (j, k), coeff in self.terms:
            j = int(j)
            k = int(k)
            if j < 0 or k < 0:
                raise ValueError(f"exponents must be nonnegative, got ({j}, {k})")
            cv = complex(coeff)
            if not (math.isfinite(cv.real) and math.isfinite(cv.imag)):
                raise ValueError(f"coefficient for ({j}, {k}) must be finite")
            merged[(j, k)] = merged.get((j, k), 0j) + cv
        object.__setattr__(
            self, "terms", tuple((jk, merged[jk]) for jk in sorted(merged))
        )

    @classmethod
    def from_dict(cls, terms: dict):
        return cls(tuple(terms.items()))

    def __call__(self, z):
        """Evaluate at a complex scalar or array, terms in sorted order."""
        zv = np.asarray(z, dtype=np.complex128)
        zbar = np.conj(zv)
        acc = np.zeros(zv.shape, dtype=np.complex128)
        for (j, k), coeff in self.terms:
            acc = acc + coeff * zv**j * zbar**k
        return complex(acc) if np.isscalar(z) or zv.ndim == 0 else acc

    def __eq__(self, other):
        if not isinstance(other, MixedPolynomial):
            return NotImplemented
        return self.terms == other.terms


def harmonic_projection(p: MixedPolynomial) -> LaurentCoefficients:
    """The unique harmonic polynomial with the same boundary trace.

    On the circle z^j conj(z)^k = z^{j-k}, so each term lands at index
    n = j - k (holomorphic for j >= k, anti-holomorphic otherwise);
    contributions at equal n accumulate by addition.
    """
    acc = {}
    for (j, k), coeff in p.terms:
        n = j - k
        acc[n] = acc.get(n, 0j) + coeff
    return LaurentCoefficients.from_terms(acc)


def as_mixed_polynomial(c: LaurentCoefficients) -> MixedPolynomial:
    """Rewrite a coefficient window as a mixed polynomial.

    Index n >= 0 becomes z^n, index n < 0 becomes conj(z)^{-n}.  Zero
    coefficients are kept so that re-projection restores the exact window.
    """
    terms = []
    for n, a in zip(c.indices, c.coeffs):
        if n >= 0:
            terms.append(((int(n), 0), complex(a)))
        else:
            terms.append(((0, int(-n)), complex(a)))
    return MixedPolynomial(tuple(terms))
