"""Truncated two-sided power series on the unit disk.

The basic object is a finite coefficient window a(n), n_min <= n <= n_max,
representing

    h(z) = sum_{n=0}^{n_max} a(n) z^n  +  sum_{n=n_min}^{-1} a(n) conj(z)^{-n}

on |z| < 1 (and, through conj(z) = 1/z, on |z| = 1 as well).  The
nonnegative part is holomorphic, the negative part anti-holomorphic, and
the sum is harmonic.  Evaluation always accumulates terms in a fixed
canonical order -- ascending |n|, the holomorphic term first at equal |n| --
so repeated runs are reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._backend import kernels

__all__ = [
    "LaurentCoefficients",
    "DiskPoint",
    "CirclePoint",
    "eval_series",
    "eval_series_many",
    "eval_dz",
    "eval_dzbar",
    "dz_coefficients",
    "dzbar_coefficients",
    "is_holomorphic",
    "coefficient_tail_bound",
]

# Slack for accepting numerically-on-the-circle points.
UNIT_MODULUS_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class LaurentCoefficients:
    """Coefficients a(n) on an index window [n_min, n_max] containing 0.

    ``coeffs`` lists a(n) for n ascending; the array is frozen after
    construction.
    """

    n_min: int
    n_max: int
    coeffs: np.ndarray

    def __post_init__(self):
        if not (self.n_min <= 0 <= self.n_max):
            raise ValueError(
                f"index window must contain 0, got [{self.n_min}, {self.n_max}]"
            )
        arr = np.array(self.coeffs, dtype=np.complex128)
        if arr.ndim != 1 or arr.shape[0] != self.n_max - self.n_min + 1:
            raise ValueError("expected one coefficient per index in [n_min, n_max]")
        if not np.all(np.isfinite(arr)):
            raise ValueError("coefficients must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    @classmethod
    def from_terms(cls, terms):
        """Build from a sparse {index: coefficient} mapping; gaps are zero."""
        if terms:
            n_min = min(0, min(terms))
            n_max = max(0, max(terms))
        else:
            n_min = n_max = 0
        arr = np.zeros(n_max - n_min + 1, dtype=np.complex128)
        for n, a in terms.items():
            arr[n - n_min] = a
        return cls(n_min, n_max, arr)

    @property
    def indices(self):
        return np.arange(self.n_min, self.n_max + 1)

    @property
    def bandwidth(self):
        """Largest |n| in the window."""
        return max(self.n_max, -self.n_min)

    def coefficient(self, n):
        """a(n), taking the value 0 outside the stored window."""
        if self.n_min <= n <= self.n_max:
            return complex(self.coeffs[n - self.n_min])
        return 0j

    def __eq__(self, other):
        if not isinstance(other, LaurentCoefficients):
            return NotImplemented
        return (
            self.n_min == other.n_min
            and self.n_max == other.n_max
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def __repr__(self):
        return (
            f"LaurentCoefficients(n_min={self.n_min}, n_max={self.n_max}, "
            f"coeffs={self.coeffs.tolist()})"
        )


@dataclass(frozen=True)
class DiskPoint:
    """A point of the open unit disk; |value| < 1 is enforced strictly."""

    value: complex

    def __post_init__(self):
        v = complex(self.value)
        if not abs(v) < 1.0:
            raise ValueError(f"|z| must be < 1, got |z| = {abs(v)!r}")
        object.__setattr__(self, "value", v)


@dataclass(frozen=True)
class CirclePoint:
    """A point of the unit circle; renormalized to unit modulus on construction."""

    value: complex

    def __post_init__(self):
        v = complex(self.value)
        r = abs(v)
        if abs(r - 1.0) > UNIT_MODULUS_TOL:
            raise ValueError(f"|z| must equal 1 within {UNIT_MODULUS_TOL}, got {r!r}")
        object.__setattr__(self, "value", v / r)


def as_interior_point(z) -> complex:
    """Coerce to a complex number strictly inside the unit disk."""
    if isinstance(z, DiskPoint):
        return z.value
    v = complex(z)
    if not abs(v) < 1.0:
        raise ValueError(f"expected |zeta| < 1, got |zeta| = {abs(v)!r}")
    return v


def as_circle_point(z) -> complex:
    """Coerce to a complex number of exactly unit modulus."""
    if isinstance(z, CirclePoint):
        return z.value
    return CirclePoint(complex(z)).value


def _as_unit_point(z) -> complex:
    if isinstance(z, DiskPoint):
        return z.value
    if isinstance(z, CirclePoint):
        return z.value
    v = complex(z)
    if abs(v) > 1.0 + UNIT_MODULUS_TOL:
        raise ValueError(f"expected |z| <= 1, got |z| = {abs(v)!r}")
    return v


def eval_series(c: LaurentCoefficients, z) -> complex:
    """Evaluate the series at one point of the closed disk.

    On the circle the anti-holomorphic part uses conj(z) = 1/z, so the same
    formula evaluates the boundary trace.
    """
    zv = _as_unit_point(z)
    return complex(
        kernels.eval_series_grid(c.coeffs, c.n_min, np.array([zv], dtype=np.complex128))[0]
    )


def eval_series_many(c: LaurentCoefficients, points) -> np.ndarray:
    """Vectorized evaluation over an array of points with |z| <= 1."""
    pts = np.asarray(points, dtype=np.complex128)
    if pts.size and float(np.max(np.abs(pts))) > 1.0 + UNIT_MODULUS_TOL:
        raise ValueError("all evaluation points must satisfy |z| <= 1")
    flat = kernels.eval_series_grid(c.coeffs, c.n_min, pts.ravel())
    return np.asarray(flat).reshape(pts.shape)


def dz_coefficients(c: LaurentCoefficients) -> LaurentCoefficients:
    """Coefficient map of d/dz: n a(n) at index n-1; negative indices vanish.

    Exposed as a coefficient-to-coefficient map so derivatives compose
    exactly, with no pointwise differentiation error.
    """
    if c.n_max == 0:
        return LaurentCoefficients(0, 0, np.zeros(1, dtype=np.complex128))
    n = np.arange(1, c.n_max + 1)
    vals = n * c.coeffs[-c.n_min + 1 :]
    return LaurentCoefficients(0, c.n_max - 1, vals)


def dzbar_coefficients(c: LaurentCoefficients) -> LaurentCoefficients:
    """Coefficient map of d/dzbar: the anti-holomorphic counterpart of dz.

    The term a(n) conj(z)^{-n} (n < 0) maps to (-n) a(n) conj(z)^{-n-1},
    i.e. index n+1 carries (-n) a(n); nonnegative indices vanish.
    """
    if c.n_min == 0:
        return LaurentCoefficients(0, 0, np.zeros(1, dtype=np.complex128))
    k = -c.n_min
    vals = np.arange(k, 0, -1) * c.coeffs[:k]
    return LaurentCoefficients(c.n_min + 1, 0, vals)


def eval_dz(c: LaurentCoefficients, z) -> complex:
    """d/dz of the series at a point (the anti-holomorphic part contributes 0)."""
    return eval_series(dz_coefficients(c), z)


def eval_dzbar(c: LaurentCoefficients, z) -> complex:
    """d/dzbar of the series at a point (the holomorphic part contributes 0)."""
    return eval_series(dzbar_coefficients(c), z)


def is_holomorphic(c: LaurentCoefficients) -> bool:
    """True iff every negative-index coefficient is exactly zero."""
    if c.n_min == 0:
        return True
    return bool(np.all(c.coeffs[: -c.n_min] == 0))


def coefficient_tail_bound(c: LaurentCoefficients, r: float) -> float:
    """max_n |a(n)| r^{|n|}, the growth functional controlling convergence.

    Requires 0 < r < 1.
    """
    if not 0.0 < r < 1.0:
        raise ValueError(f"r must lie in (0, 1), got {r!r}")
    return float(np.max(np.abs(c.coeffs) * r ** np.abs(c.indices)))
