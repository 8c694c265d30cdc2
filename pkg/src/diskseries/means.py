"""Radial integral means and their monotonicity.

For a monotone convex gauge phi with phi(0) = 0, the circle mean of
phi(|h(r z)|) is nondecreasing in r; the sup of |h(r z)| likewise.  For
holomorphic series the power gauges t^p extend down to 0 < p < 1.  The
means here are discrete circle averages, so the monotonicity contracts
carry small relative tolerances.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._backend import kernels
from .poisson import circle_grid
from .series import LaurentCoefficients, is_holomorphic

__all__ = [
    "ConvexGauge",
    "MeanTable",
    "integral_mean",
    "sup_mean",
    "mean_scan",
    "holomorphic_subconvex_scan",
    "PROPOSITION_REL_TOL",
    "HOLOMORPHIC_REL_TOL",
]

# Default relative tolerances for the monotonicity contracts.
PROPOSITION_REL_TOL = 1e-10
HOLOMORPHIC_REL_TOL = 1e-9

DEFAULT_GRID = 1024


@dataclass(frozen=True, eq=False)
class ConvexGauge:
    """A monotone gauge phi on [0, inf) normalized to phi(0) = 0.

    Kinds: ``power`` (t^p), ``exp_scaled`` (exp(lam*t) - 1), ``tabulated``
    (piecewise-linear through given knots).  Power gauges with p >= 1,
    exponential gauges, and tabulated gauges passing the discrete
    monotonicity/convexity checks are eligible for the general harmonic
    monotonicity result; power gauges with 0 < p < 1 are monotone but not
    convex and are admitted for holomorphic series only.
    """

    kind: str
    exponent: float | None = None
    rate: float | None = None
    knots: np.ndarray | None = field(default=None, repr=False)
    values: np.ndarray | None = field(default=None, repr=False)

    @classmethod
    def power(cls, p: float):
        if not p > 0.0:
            raise ValueError(f"power exponent must be > 0, got {p!r}")
        return cls("power", exponent=float(p))

    @classmethod
    def exp_scaled(cls, lam: float):
        if not lam > 0.0:
            raise ValueError(f"exponential rate must be > 0, got {lam!r}")
        return cls("exp_scaled", rate=float(lam))

    @classmethod
    def tabulated(cls, knots, values):
        k = np.asarray(knots, dtype=np.float64)
        v = np.asarray(values, dtype=np.float64)
        if k.ndim != 1 or k.shape != v.shape or k.shape[0] < 2:
            raise ValueError("need matching 1-d knots/values with at least 2 entries")
        if not (np.all(np.isfinite(k)) and np.all(np.isfinite(v))):
            raise ValueError("knots and values must be finite")
        if k[0] != 0.0 or np.any(np.diff(k) <= 0.0):
            raise ValueError("knots must start at 0 and increase strictly")
        v = v - v[0]  # normalize phi(0) = 0
        if np.any(np.diff(v) < 0.0):
            raise ValueError("tabulated gauge must be nondecreasing")
        slopes = np.diff(v) / np.diff(k)
        if np.any(np.diff(slopes) < 0.0):
            raise ValueError("tabulated gauge failed the discrete convexity check")
        k.setflags(write=False)
        v.setflags(write=False)
        return cls("tabulated", knots=k, values=v)

    @property
    def proposition_eligible(self) -> bool:
        """Monotone increasing and convex on [0, inf)."""
        if self.kind == "power":
            return self.exponent >= 1.0
        return True  # exp_scaled always; tabulated was checked at construction

    @property
    def holomorphic_only(self) -> bool:
        return self.kind == "power" and self.exponent < 1.0

    def __call__(self, t):
        tv = np.asarray(t, dtype=np.float64)
        if self.kind == "power":
            return tv**self.exponent
        if self.kind == "exp_scaled":
            return np.expm1(self.rate * tv)
        out = np.interp(tv, self.knots, self.values)
        # np.interp clamps on the right; extend linearly with the last slope.
        last_slope = (self.values[-1] - self.values[-2]) / (self.knots[-1] - self.knots[-2])
        out = np.where(tv > self.knots[-1], self.values[-1] + last_slope * (tv - self.knots[-1]), out)
        return out

    def describe(self) -> str:
        if self.kind == "power":
            return f"power:{self.exponent:g}"
        if self.kind == "exp_scaled":
            return f"exp:{self.rate:g}"
        return f"tabulated[{self.knots.shape[0]} knots]"


@dataclass(frozen=True, eq=False)
class MeanTable:
    """Integral means (or sup means) indexed by strictly increasing radii."""

    radii: tuple
    means: tuple
    gauge: ConvexGauge | None
    m: int

    def __post_init__(self):
        r = np.asarray(self.radii, dtype=np.float64)
        v = np.asarray(self.means, dtype=np.float64)
        if r.shape != v.shape or r.ndim != 1:
            raise ValueError("radii and means must be matching 1-d sequences")
        if np.any(np.diff(r) <= 0.0):
            raise ValueError("radii must increase strictly")
        if not np.all(np.isfinite(v)) or np.any(v < 0.0):
            raise ValueError("means must be finite and nonnegative")
        object.__setattr__(self, "radii", tuple(float(x) for x in r))
        object.__setattr__(self, "means", tuple(float(x) for x in v))

    def is_nondecreasing(self, rel_tol: float = PROPOSITION_REL_TOL) -> bool:
        """Monotone up to rel_tol * (1 + max mean) between consecutive radii."""
        tol = rel_tol * (1.0 + max(self.means, default=0.0))
        return all(b >= a - tol for a, b in zip(self.means, self.means[1:]))


def _moduli_on_circle(c: LaurentCoefficients, r: float, m: int) -> np.ndarray:
    pts = r * circle_grid(m)
    return np.abs(kernels.eval_series_grid(c.coeffs, c.n_min, pts))


def integral_mean(c: LaurentCoefficients, r: float, g: ConvexGauge, m: int = DEFAULT_GRID) -> float:
    """Discrete circle mean (1/m) sum_k phi(|h(r z_k)|)."""
    if m < 64:
        raise ValueError(f"need m >= 64, got {m}")
    if not 0.0 < r < 1.0:
        raise ValueError(f"r must lie in (0, 1), got {r!r}")
    return float(np.mean(g(_moduli_on_circle(c, r, m))))


def sup_mean(c: LaurentCoefficients, r: float, m: int = DEFAULT_GRID) -> float:
    """max_k |h(r z_k)| over the circle grid scaled by r, for 0 < r <= 1."""
    if m < 64:
        raise ValueError(f"need m >= 64, got {m}")
    if not 0.0 < r <= 1.0:
        raise ValueError(f"r must lie in (0, 1], got {r!r}")
    return float(np.max(_moduli_on_circle(c, r, m)))


def _check_scan_args(c: LaurentCoefficients, radii, m: int):
    radii = [float(r) for r in radii]
    if not radii:
        raise ValueError("need at least one radius")
    if any(not 0.0 < r < 1.0 for r in radii):
        raise ValueError("radii must lie in (0, 1)")
    if any(b <= a for a, b in zip(radii, radii[1:])):
        raise ValueError("radii must increase strictly")
    # phi(|h|) is not band-limited; require a safety factor over the bandwidth
    # so quadrature error stays far below the monotonicity tolerance.
    if m <= 8 * (c.bandwidth + 1):
        raise ValueError(f"need m > 8*(bandwidth+1) = {8 * (c.bandwidth + 1)}, got {m}")
    return radii


def mean_scan(c: LaurentCoefficients, g: ConvexGauge, radii, m: int = DEFAULT_GRID) -> MeanTable:
    """Integral means across radii for a gauge eligible for harmonic input.

    The downstream contract: the table is nondecreasing within
    1e-10 * (1 + max mean).
    """
    if g.holomorphic_only:
        raise ValueError(
            "gauge power(p) with p < 1 is not convex; use holomorphic_subconvex_scan"
        )
    radii = _check_scan_args(c, radii, m)
    means = [integral_mean(c, r, g, m) for r in radii]
    return MeanTable(tuple(radii), tuple(means), g, m)


def holomorphic_subconvex_scan(
    c: LaurentCoefficients, p: float, radii, m: int = DEFAULT_GRID
) -> MeanTable:
    """Means of |f(r z)|^p with 0 < p < 1, valid for holomorphic series only.

    The claim fails for general harmonic input, so non-holomorphic
    coefficients are rejected.  Contract: nondecreasing within
    1e-9 * (1 + max mean).
    """
    if not 0.0 < p < 1.0:
        raise ValueError(f"p must lie in (0, 1), got {p!r}")
    if not is_holomorphic(c):
        raise ValueError("subconvex power means require a holomorphic series")
    radii = _check_scan_args(c, radii, m)
    gauge = ConvexGauge.power(p)
    means = [float(np.mean(_moduli_on_circle(c, r, m) ** p)) for r in radii]
    return MeanTable(tuple(radii), tuple(means), gauge, m)
