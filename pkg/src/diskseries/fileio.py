"""File formats: coefficient/polynomial/matrix JSON, boundary and table CSV.

All floating-point output is written with 17 significant digits, which
round-trips doubles exactly and keeps repeated runs byte-identical.
"""

from __future__ import annotations

import csv
import json
import math
from pathlib import Path

import numpy as np

from .means import MeanTable
from .poisson import TWO_PI, BoundarySamples, MixedPolynomial
from .series import LaurentCoefficients

__all__ = [
    "fmt17",
    "write_coefficients",
    "read_coefficients",
    "write_family",
    "read_family",
    "write_boundary",
    "read_boundary",
    "read_points",
    "write_mixed_polynomial",
    "read_mixed_polynomial",
    "write_matrix",
    "read_matrix",
    "write_polynomial",
    "read_polynomial",
    "write_mean_table",
    "write_extraction",
]


def fmt17(x: float) -> str:
    """Decimal form with 17 significant digits (lossless for doubles)."""
    return format(float(x), ".17g")


def _pairs(values) -> str:
    return ",".join(f"[{fmt17(v.real)},{fmt17(v.imag)}]" for v in values)


def _require(cond: bool, message: str):
    if not cond:
        raise ValueError(message)


# -- coefficient JSON: {"n_min": int, "n_max": int, "coeffs": [[re, im], ...]} --

def _coefficients_doc(c: LaurentCoefficients) -> str:
    return '{"n_min": %d, "n_max": %d, "coeffs": [%s]}' % (c.n_min, c.n_max, _pairs(c.coeffs))


def write_coefficients(c: LaurentCoefficients, path):
    Path(path).write_text(_coefficients_doc(c) + "\n", encoding="utf-8")


def _coefficients_from_obj(obj) -> LaurentCoefficients:
    _require(isinstance(obj, dict), "coefficient object must be a JSON object")
    for key in ("n_min", "n_max", "coeffs"):
        _require(key in obj, f"coefficient object missing key {key!r}")
    pairs = obj["coeffs"]
    _require(
        isinstance(pairs, list) and all(isinstance(p, list) and len(p) == 2 for p in pairs),
        "coeffs must be a list of [re, im] pairs",
    )
    vals = np.array([complex(float(re), float(im)) for re, im in pairs], dtype=np.complex128)
    return LaurentCoefficients(int(obj["n_min"]), int(obj["n_max"]), vals)


def read_coefficients(path) -> LaurentCoefficients:
    return _coefficients_from_obj(json.loads(Path(path).read_text(encoding="utf-8")))


# -- family JSON: array of coefficient objects --

def write_family(members, path):
    body = ",".join(_coefficients_doc(c) for c in members)
    Path(path).write_text("[" + body + "]\n", encoding="utf-8")


def read_family(path) -> list[LaurentCoefficients]:
    obj = json.loads(Path(path).read_text(encoding="utf-8"))
    _require(isinstance(obj, list), "family file must hold a JSON array")
    return [_coefficients_from_obj(entry) for entry in obj]


# -- boundary CSV: header k,theta,re,im with theta = 2*pi*k/m --

def write_boundary(s: BoundarySamples, path):
    lines = ["k,theta,re,im"]
    for k, v in enumerate(s.values):
        theta = TWO_PI * k / s.m
        lines.append(f"{k},{fmt17(theta)},{fmt17(v.real)},{fmt17(v.imag)}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_boundary(path) -> BoundarySamples:
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    _require(bool(rows) and rows[0] == ["k", "theta", "re", "im"],
             f"{path}: expected header 'k,theta,re,im'")
    values = []
    for i, row in enumerate(rows[1:], start=2):
        _require(len(row) == 4, f"{path}: row {i}: expected 4 fields")
        try:
            k = int(row[0])
            float(row[1])
            re, im = float(row[2]), float(row[3])
        except ValueError as exc:
            raise ValueError(f"{path}: row {i}: {exc}") from exc
        _require(k == i - 2, f"{path}: row {i}: sample index {k} out of order")
        _require(math.isfinite(re) and math.isfinite(im), f"{path}: row {i}: non-finite value")
        values.append(complex(re, im))
    _require(bool(values), f"{path}: no sample rows")
    return BoundarySamples(len(values), np.array(values, dtype=np.complex128))


# -- target points CSV: header re,im --

def read_points(path) -> list[complex]:
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    _require(bool(rows) and rows[0] == ["re", "im"], f"{path}: expected header 're,im'")
    points = []
    for i, row in enumerate(rows[1:], start=2):
        _require(len(row) == 2, f"{path}: row {i}: expected 2 fields")
        try:
            re, im = float(row[0]), float(row[1])
        except ValueError as exc:
            raise ValueError(f"{path}: row {i}: {exc}") from exc
        _require(math.isfinite(re) and math.isfinite(im), f"{path}: row {i}: non-finite value")
        points.append(complex(re, im))
    return points


# -- mixed polynomial JSON: {"terms": [{"j": int, "k": int, "re": f, "im": f}, ...]} --

def write_mixed_polynomial(p: MixedPolynomial, path):
    parts = [
        '{"j": %d, "k": %d, "re": %s, "im": %s}' % (j, k, fmt17(c.real), fmt17(c.imag))
        for (j, k), c in p.terms
    ]
    Path(path).write_text('{"terms": [' + ",".join(parts) + "]}\n", encoding="utf-8")


def read_mixed_polynomial(path) -> MixedPolynomial:
    obj = json.loads(Path(path).read_text(encoding="utf-8"))
    _require(isinstance(obj, dict) and isinstance(obj.get("terms"), list),
             "mixed polynomial file must hold {\"terms\": [...]}")
    terms = []
    for entry in obj["terms"]:
        _require(
            isinstance(entry, dict) and {"j", "k", "re", "im"} <= set(entry),
            "each term needs j, k, re, im",
        )
        terms.append(((int(entry["j"]), int(entry["k"])),
                      complex(float(entry["re"]), float(entry["im"]))))
    return MixedPolynomial(tuple(terms))


# -- matrix JSON: {"dim": int, "entries": [[re, im], ...]} row-major --

def write_matrix(matrix: np.ndarray, path):
    mat = np.asarray(matrix, dtype=np.complex128)
    doc = '{"dim": %d, "entries": [%s]}' % (mat.shape[0], _pairs(mat.ravel()))
    Path(path).write_text(doc + "\n", encoding="utf-8")


def read_matrix(path) -> np.ndarray:
    obj = json.loads(Path(path).read_text(encoding="utf-8"))
    _require(isinstance(obj, dict) and "dim" in obj and "entries" in obj,
             "matrix file must hold {\"dim\": ..., \"entries\": [...]}")
    dim = int(obj["dim"])
    pairs = obj["entries"]
    _require(len(pairs) == dim * dim, f"expected {dim * dim} entries, got {len(pairs)}")
    flat = np.array([complex(float(re), float(im)) for re, im in pairs], dtype=np.complex128)
    return flat.reshape(dim, dim)


# -- polynomial JSON: {"coeffs": [[re, im], ...]} ascending degree --

def write_polynomial(coefficients, path):
    Path(path).write_text('{"coeffs": [%s]}\n' % _pairs(coefficients), encoding="utf-8")


def read_polynomial(path) -> np.ndarray:
    obj = json.loads(Path(path).read_text(encoding="utf-8"))
    _require(isinstance(obj, dict) and isinstance(obj.get("coeffs"), list),
             "polynomial file must hold {\"coeffs\": [...]}")
    return np.array(
        [complex(float(re), float(im)) for re, im in obj["coeffs"]], dtype=np.complex128
    )


# -- mean table CSV: header r,mean, then a monotone trailer --

def write_mean_table(table: MeanTable, path, monotone: bool):
    lines = ["r,mean"]
    for r, v in zip(table.radii, table.means):
        lines.append(f"{fmt17(r)},{fmt17(v)}")
    lines.append(f"monotone: {'true' if monotone else 'false'}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


# -- extraction JSON: {"indices": [...], "degenerate": bool} --

def write_extraction(result, path):
    doc = '{"indices": [%s], "degenerate": %s}' % (
        ",".join(str(i) for i in result.indices),
        "true" if result.degenerate else "false",
    )
    Path(path).write_text(doc + "\n", encoding="utf-8")
