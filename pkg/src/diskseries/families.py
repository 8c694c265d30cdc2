"""Normal families at desk scale.

A finite family of coefficient windows stands in for the function family:
bounds M(r) on moduli over compact subdisks, bounds C(r) on the weighted
coefficients, the explicit two-sided estimates tying them together, and a
deterministic finite surrogate of the diagonal subsequence argument.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .means import sup_mean
from .poisson import circle_grid
from .series import LaurentCoefficients, coefficient_tail_bound

__all__ = [
    "FunctionFamily",
    "NormalityCertificate",
    "function_bound",
    "coefficient_bound_from_function",
    "function_bound_from_coefficients",
    "normality_certificate",
    "ExtractionResult",
    "extract_subsequence",
    "ConvergenceReport",
    "convergence_equivalence_check",
]


@dataclass(frozen=True, eq=False)
class FunctionFamily:
    """A finite, ordered collection of coefficient windows."""

    members: tuple
    label: str = ""

    def __post_init__(self):
        members = tuple(self.members)
        if not members:
            raise ValueError("family must be nonempty")
        for m in members:
            if not isinstance(m, LaurentCoefficients):
                raise TypeError(f"family members must be LaurentCoefficients, got {type(m)}")
        object.__setattr__(self, "members", members)

    @property
    def bandwidth(self) -> int:
        return max(m.bandwidth for m in self.members)

    @property
    def window(self) -> tuple[int, int]:
        return (
            min(m.n_min for m in self.members),
            max(m.n_max for m in self.members),
        )


@dataclass(frozen=True, eq=False)
class NormalityCertificate:
    """Witnesses M(r) and C(r) over a list of radii."""

    radii: tuple
    m_bounds: tuple
    c_bounds: tuple

    def __post_init__(self):
        if not (len(self.radii) == len(self.m_bounds) == len(self.c_bounds)):
            raise ValueError("radii, m_bounds, c_bounds must align")
        if any(b < 0 for b in self.m_bounds) or any(b < 0 for b in self.c_bounds):
            raise ValueError("bounds must be nonnegative")


def function_bound(f: FunctionFamily, r: float, m: int = 1024) -> float:
    """Witness M(r): max of |h(r z_k)| over members and grid points."""
    return max(sup_mean(c, r, m) for c in f.members)


def coefficient_bound_from_function(f: FunctionFamily, r: float, m: int = 1024) -> float:
    """Witness C(r): max of |a(n)| r^{|n|}, computed through the quadrature identity.

    Each a(n) r^{|n|} is an m-point average of values bounded by M(r), so
    the result never exceeds the :func:`function_bound` witness.
    """
    if not 0.0 < r < 1.0:
        raise ValueError(f"r must lie in (0, 1), got {r!r}")
    if m <= 2 * f.bandwidth:
        raise ValueError(f"need m > 2*bandwidth = {2 * f.bandwidth}, got {m}")
    best = 0.0
    for c in f.members:
        grid = circle_grid(m)
        samples = kernels.eval_series_grid(c.coeffs, c.n_min, r * grid)
        raw = kernels.extract_raw_coefficients(samples, grid, c.bandwidth)
        best = max(best, float(np.max(np.abs(raw))))
    return best


def function_bound_from_coefficients(f: FunctionFamily, r: float, s: float) -> float:
    """An explicit M(r) bound built from the coefficient bound at radius s > r.

    From |a(n)| <= C(s) s^{-|n|}, summing the series at radius r gives
    C(s) * sum_{n in window} (r/s)^{|n|}.  Dominates the grid witness.
    """
    if not 0.0 < r < s < 1.0:
        raise ValueError(f"need 0 < r < s < 1, got r={r!r}, s={s!r}")
    c_s = max(coefficient_tail_bound(c, s) for c in f.members)
    lo, hi = f.window
    ratio_sum = sum((r / s) ** abs(n) for n in range(lo, hi + 1))
    return c_s * ratio_sum


def normality_certificate(f: FunctionFamily, radii, m: int = 1024) -> NormalityCertificate:
    """M(r) and C(r) witnesses for each radius."""
    radii = tuple(float(r) for r in radii)
    return NormalityCertificate(
        radii,
        tuple(function_bound(f, r, m) for r in radii),
        tuple(coefficient_bound_from_function(f, r, m) for r in radii),
    )


@dataclass(frozen=True)
class ExtractionResult:
    """Selected indices; degenerate means the subsequence has one member."""

    indices: tuple
    degenerate: bool


def _diagonal_indices(n_min: int, n_max: int):
    yield 0
    for k in range(1, max(n_max, -n_min) + 1):
        if k <= n_max:
            yield k
        if -k >= n_min:
            yield -k


def extract_subsequence(seq, tol: float) -> ExtractionResult:
    """A finite stand-in for the diagonal subsequence argument.

    Visits indices n = 0, 1, -1, 2, -2, ... and repeatedly keeps the
    largest group of members whose a(n) values fall in the same square box
    of side ``tol`` (ties broken by the lexicographically smallest box
    corner), so consecutive survivors differ by at most ``tol`` in each
    coordinate of every coefficient.
    """
    seq = list(seq)
    if not seq:
        raise ValueError("cannot extract from an empty sequence")
    if tol <= 0.0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    window = (seq[0].n_min, seq[0].n_max)
    for c in seq:
        if (c.n_min, c.n_max) != window:
            raise ValueError("all members must share one support window")
    indices = list(range(len(seq)))
    for n in _diagonal_indices(*window):
        if len(indices) == 1:
            break
        groups: dict[tuple[int, int], list[int]] = {}
        for idx in indices:
            v = seq[idx].coefficient(n)
            box = (math.floor(v.real / tol), math.floor(v.imag / tol))
            groups.setdefault(box, []).append(idx)
        best_box = min(groups, key=lambda b: (-len(groups[b]), b))
        indices = groups[best_box]
    return ExtractionResult(tuple(indices), len(indices) == 1)


@dataclass(frozen=True)
class ConvergenceReport:
    """Per-member distances to a limit, in both convergence senses.

    ``coeff_dist[j]`` is max_n |a_j(n) - a(n)|; ``sup_dist[j][i]`` is the
    grid sup of |h_j - h| on the circle of radius ``radii[i]``.
    """

    radii: tuple
    coeff_dist: tuple
    sup_dist: tuple


def convergence_equivalence_check(
    seq, limit: LaurentCoefficients, radii, m: int = 1024
) -> ConvergenceReport:
    """Measure coefficient distance and sup distance of each member to the limit.

    The two vanish together: sup distance at radius r is at most
    (coefficient distance) * sum_{window} r^{|n|}, and each coefficient
    distance is at most (sup distance at r) / r^{bandwidth} by the
    quadrature identity.
    """
    seq = list(seq)
    window = (limit.n_min, limit.n_max)
    for c in seq:
        if (c.n_min, c.n_max) != window:
            raise ValueError("all members must share the limit's support window")
    radii = tuple(float(r) for r in radii)
    if any(not 0.0 < r < 1.0 for r in radii):
        raise ValueError("radii must lie in (0, 1)")
    coeff_dist = []
    sup_dist = []
    for c in seq:
        delta = LaurentCoefficients(window[0], window[1], c.coeffs - limit.coeffs)
        coeff_dist.append(float(np.max(np.abs(delta.coeffs))))
        row = []
        for r in radii:
            pts = r * circle_grid(m)
            row.append(float(np.max(np.abs(kernels.eval_series_grid(delta.coeffs, delta.n_min, pts)))))
        sup_dist.append(tuple(row))
    return ConvergenceReport(radii, tuple(coeff_dist), tuple(sup_dist))
