"""Finite contraction matrices, polynomial functional calculus, and the
von Neumann inequality check.

The operator norm is computed by a fixed, fully deterministic power
iteration on the Gram matrix (all-ones start vector, relative tolerance
1e-12, 10000-iteration cap) so that sweep results reproduce exactly across
runs and platforms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .poisson import circle_grid
from .rng import SplitMix64

__all__ = [
    "NonConvergenceError",
    "ContractionOperator",
    "ComplexPolynomial",
    "operator_norm",
    "apply_polynomial",
    "sup_modulus_on_disk",
    "VonNeumannResult",
    "von_neumann_check",
    "VonNeumannTrial",
    "von_neumann_sweep",
    "random_contraction",
    "random_polynomial",
]

CONTRACTION_TOL = 1e-10
_NORM_TOL = 1e-12
_NORM_MAX_ITER = 10_000
_GRID_CAP = 1 << 22


class NonConvergenceError(RuntimeError):
    """An iterative routine hit its cap without meeting tolerance."""


def operator_norm(matrix, tol: float = _NORM_TOL, max_iter: int = _NORM_MAX_ITER) -> float:
    """Largest singular value via power iteration on the Gram matrix.

    Iterates v -> (T^H T) v from the normalized all-ones vector, tracking
    the quadratic form v^H (T^H T) v until its relative change drops below
    ``tol``.  Accurate to ~1e-10 relative for matrices whose top two
    singular values are separated; raises :class:`NonConvergenceError` if
    the iteration cap is reached first.
    """
    a = np.asarray(matrix, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    n = a.shape[0]
    gram = a.conj().T @ a
    v = np.ones(n, dtype=np.complex128) / math.sqrt(n)
    lam_prev = None
    for _ in range(max_iter):
        w = gram @ v
        lam = float(np.real(np.vdot(v, w)))
        norm_w = float(np.linalg.norm(w))
        if norm_w == 0.0:
            return 0.0
        v = w / norm_w
        if lam_prev is not None and abs(lam - lam_prev) <= tol * max(abs(lam), 1e-300):
            return math.sqrt(max(lam, 0.0))
        lam_prev = lam
    raise NonConvergenceError(
        f"power iteration did not meet tolerance {tol!r} within {max_iter} iterations"
    )


@dataclass(frozen=True, eq=False)
class ContractionOperator:
    """A square complex matrix with operator norm <= 1 (tolerance 1e-10)."""

    entries: np.ndarray

    def __post_init__(self):
        arr = np.array(self.entries, dtype=np.complex128)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("matrix entries must be finite")
        nrm = operator_norm(arr)
        if nrm > 1.0 + CONTRACTION_TOL:
            raise ValueError(f"operator norm {nrm!r} exceeds 1 beyond tolerance")
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @classmethod
    def truncated_shift(cls, dim: int):
        """The one-sided shift cut to dim dimensions: ones on the subdiagonal."""
        mat = np.zeros((dim, dim), dtype=np.complex128)
        for j in range(dim - 1):
            mat[j + 1, j] = 1.0
        return cls(mat)


@dataclass(frozen=True, eq=False)
class ComplexPolynomial:
    """Coefficients c_0..c_degree ascending; the leading one may be zero."""

    coefficients: np.ndarray

    def __post_init__(self):
        arr = np.array(self.coefficients, dtype=np.complex128)
        if arr.ndim != 1 or arr.shape[0] < 1:
            raise ValueError("expected a nonempty 1-d coefficient array")
        if not np.all(np.isfinite(arr)):
            raise ValueError("coefficients must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "coefficients", arr)

    @property
    def degree(self) -> int:
        return self.coefficients.shape[0] - 1

    def __call__(self, z):
        zv = np.asarray(z, dtype=np.complex128)
        vals = kernels.polyval_grid(self.coefficients, zv.ravel())
        return complex(vals[0]) if zv.ndim == 0 else np.asarray(vals).reshape(zv.shape)


def _as_matrix(t) -> np.ndarray:
    return t.entries if isinstance(t, ContractionOperator) else np.asarray(t, dtype=np.complex128)


def apply_polynomial(p: ComplexPolynomial, t) -> np.ndarray:
    """p(T) = c_n T^n + ... + c_0 I, evaluated by Horner in the matrix algebra."""
    mat = _as_matrix(t)
    eye = np.eye(mat.shape[0], dtype=np.complex128)
    c = p.coefficients
    acc = c[-1] * eye
    for j in range(c.shape[0] - 2, -1, -1):
        acc = acc @ mat + c[j] * eye
    return acc


def sup_modulus_on_disk(p: ComplexPolynomial, m: int, agreement: float = 1e-9) -> float:
    """Supremum of |p| over the closed unit disk, via circle-grid refinement.

    |p| is subharmonic so the maximum is attained on the circle; the grid
    is doubled (reusing previous nodes) until two successive refinements
    agree within ``agreement``.
    """
    if m < 4 * (p.degree + 1):
        raise ValueError(f"need m >= 4*(degree+1) = {4 * (p.degree + 1)}, got {m}")
    g = int(m)
    cur = float(np.max(np.abs(kernels.polyval_grid(p.coefficients, circle_grid(g)))))
    while g <= _GRID_CAP:
        # Odd nodes of the doubled grid; even nodes are the current grid.
        odd = np.exp(1j * np.pi * (2.0 * np.arange(g) + 1.0) / g)
        odd /= np.abs(odd)
        nxt = max(cur, float(np.max(np.abs(kernels.polyval_grid(p.coefficients, odd)))))
        if abs(nxt - cur) <= agreement:
            return nxt
        cur = nxt
        g *= 2
    raise NonConvergenceError(
        f"grid refinement passed {_GRID_CAP} nodes without {agreement!r} agreement"
    )


@dataclass(frozen=True)
class VonNeumannResult:
    """Outcome of a single inequality check: ||p(T)|| vs sup_disk |p|."""

    lhs: float
    rhs: float
    holds: bool

    @property
    def margin(self) -> float:
        return self.rhs - self.lhs


# Absolute slack absorbing norm-estimation and grid-supremum error; the
# inequality itself is exact mathematics.
VON_NEUMANN_TOL = 1e-8


def von_neumann_check(p: ComplexPolynomial, t) -> VonNeumannResult:
    """Check ||p(T)|| <= sup_{|z| <= 1} |p(z)| for a contraction T.

    ``t`` is normally a :class:`ContractionOperator`; passing a raw matrix
    skips the contraction invariant, which is only useful for exercising
    the violation-reporting path.
    """
    lhs = operator_norm(apply_polynomial(p, t))
    rhs = sup_modulus_on_disk(p, max(64, 4 * (p.degree + 1)))
    return VonNeumannResult(lhs, rhs, bool(lhs <= rhs + VON_NEUMANN_TOL))


def random_contraction(rng: SplitMix64, dim: int) -> ContractionOperator:
    """Entries uniform in the complex unit box, scaled to norm <= a random s in [0, 1]."""
    flat = [complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)) for _ in range(dim * dim)]
    a = np.array(flat, dtype=np.complex128).reshape(dim, dim)
    scale = rng.uniform(0.0, 1.0)
    nrm = operator_norm(a)
    if nrm > 0.0:
        a = a * (scale / nrm)
    return ContractionOperator(a)


def random_polynomial(rng: SplitMix64, max_degree: int) -> ComplexPolynomial:
    """Random degree <= max_degree with coefficients uniform in the unit box."""
    degree = rng.below(max_degree + 1)
    coeffs = [complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)) for _ in range(degree + 1)]
    return ComplexPolynomial(np.array(coeffs, dtype=np.complex128))


@dataclass(frozen=True)
class VonNeumannTrial:
    trial: int
    matrix: np.ndarray
    polynomial: ComplexPolynomial
    result: VonNeumannResult


def von_neumann_sweep(
    seed: int,
    trials: int,
    max_dim: int = 6,
    max_degree: int = 8,
    inject_norm: float | None = None,
) -> list[VonNeumannTrial]:
    """Seeded sweep of random contraction/polynomial pairs.

    Fully reproducible: all randomness flows from one SplitMix64 stream.
    ``inject_norm`` rescales trial 0's matrix to the given norm, bypassing
    the contraction invariant; it exists to exercise the violation path.
    """
    rng = SplitMix64(seed)
    out = []
    for trial in range(trials):
        dim = 1 + rng.below(max_dim)
        t = random_contraction(rng, dim)
        p = random_polynomial(rng, max_degree)
        mat = t.entries
        if inject_norm is not None and trial == 0:
            nrm = operator_norm(mat)
            if nrm > 0.0:
                mat = mat * (inject_norm / nrm)
            p = ComplexPolynomial(np.array([0.0, 1.0], dtype=np.complex128))
        out.append(VonNeumannTrial(trial, mat, p, von_neumann_check(p, mat)))
    return out
