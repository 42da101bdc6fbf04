"""Dispersion-based weighting via the coefficient of variation.

Each criterion's weight is proportional to its column's CV (population
standard deviation over absolute mean). No normalization step exists on
this path, and negative data is legal as long as column means stay away
from zero.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AllColumnsConstant, DegenerateMean, TooFewAlternatives
from .matrix import DecisionMatrix, WeightVector

# CVs at or below this are indistinguishable from a constant column
_CONSTANT_EPS = 1e-12


@dataclass(frozen=True)
class DispersionBreakdown:
    """Per-criterion mean, population standard deviation, and CV."""

    mean: tuple[float, ...]
    std: tuple[float, ...]
    cv: tuple[float, ...]

    def __post_init__(self):
        if any(s < 0 for s in self.std):
            raise ValueError("standard deviations must be nonnegative")
        if any(c < 0 for c in self.cv):
            raise ValueError("coefficients of variation must be nonnegative")


def column_mean(values) -> float:
    """Arithmetic mean of one criterion column."""
    col = np.asarray(values, dtype=np.float64)
    if col.size < 2:
        raise TooFewAlternatives("a column needs at least 2 values")
    return float(col.mean())


def column_std(values) -> float:
    """Population standard deviation (divisor n) of one criterion column."""
    col = np.asarray(values, dtype=np.float64)
    if col.size < 2:
        raise TooFewAlternatives("a column needs at least 2 values")
    return float(col.std())


def coefficient_of_variation(
    mean: float, std: float, value_scale: float | None = None
) -> float:
    """CV = std / |mean|.

    The absolute mean keeps all-negative columns on the nonnegative weight
    simplex; for positive data it coincides with the plain ratio. A mean
    that vanishes relative to ``value_scale`` (the column's largest
    magnitude, when known) makes the CV meaningless and raises instead.
    """
    scale = abs(mean) if value_scale is None else value_scale
    if abs(mean) <= 1e-9 * max(1.0, scale):
        raise DegenerateMean()
    return std / abs(mean)


def dwm_weights(matrix: DecisionMatrix) -> tuple[WeightVector, DispersionBreakdown]:
    """Weights proportional to each column's coefficient of variation.

    Raises:
        DegenerateMean: a column's mean vanishes at the data's scale.
        AllColumnsConstant: every column has zero dispersion.
    """
    values = matrix.values
    means = values.mean(axis=0)
    stds = values.std(axis=0)
    scales = np.abs(values).max(axis=0)

    degenerate = np.flatnonzero(np.abs(means) <= 1e-9 * np.maximum(1.0, scales))
    if degenerate.size:
        raise DegenerateMean(int(degenerate[0]))

    cvs = stds / np.abs(means)
    if (cvs <= _CONSTANT_EPS).all():
        raise AllColumnsConstant("every column is constant; no dispersion to weight")

    weights = cvs / cvs.sum()
    breakdown = DispersionBreakdown(
        mean=tuple(float(m) for m in means),
        std=tuple(float(s) for s in stds),
        cv=tuple(float(c) for c in cvs),
    )
    return WeightVector(tuple(float(w) for w in weights), "dwm"), breakdown
