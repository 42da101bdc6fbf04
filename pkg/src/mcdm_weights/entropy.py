"""Shannon entropy weighting.

Pipeline: share-of-column normalization, per-criterion entropy scaled into
[0, 1] by 1/ln(alternative count), degree of divergence 1 - E, and weights
proportional to divergence. Columns with more dispersion carry more weight;
a uniform column is fully entropic and carries none.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    AllColumnsUniform,
    NegativeEntry,
    TooFewAlternatives,
    ZeroColumn,
)
from .matrix import DecisionMatrix, WeightVector

# divergences at or below this are indistinguishable from a uniform column
_UNIFORM_EPS = 1e-12


@dataclass(frozen=True)
class NormalizedMatrix:
    """Column-stochastic share matrix: each column sums to 1."""

    values: np.ndarray
    criterion_names: tuple[str, ...]

    def __post_init__(self):
        frozen = np.array(self.values, dtype=np.float64, copy=True)
        if frozen.ndim != 2 or frozen.shape[1] != len(self.criterion_names):
            raise ValueError("shape does not match criterion names")
        if (frozen < -1e-12).any() or (frozen > 1.0 + 1e-12).any():
            raise ValueError("shares must lie in [0, 1]")
        sums = frozen.sum(axis=0)
        if (np.abs(sums - 1.0) > 1e-12).any():
            raise ValueError("each column must sum to 1")
        frozen.flags.writeable = False
        object.__setattr__(self, "values", frozen)

    @property
    def n_alternatives(self) -> int:
        return int(self.values.shape[0])

    @property
    def n_criteria(self) -> int:
        return int(self.values.shape[1])

    def column(self, j: int) -> np.ndarray:
        return self.values[:, j]


@dataclass(frozen=True)
class EntropyBreakdown:
    """Per-criterion entropy and divergence plus the scaling constant k."""

    entropy: tuple[float, ...]
    divergence: tuple[float, ...]
    k: float

    def __post_init__(self):
        for e, d in zip(self.entropy, self.divergence):
            if not -1e-12 <= e <= 1.0 + 1e-12:
                raise ValueError(f"entropy {e!r} outside [0, 1]")
            if d != 1.0 - e:
                raise ValueError("divergence must equal 1 - entropy")


def normalize_columns(matrix: DecisionMatrix) -> NormalizedMatrix:
    """Divide every entry by its column total.

    The entropy path rejects negative data outright rather than shifting it:
    ln fails on negatives and silently repairing that would misrepresent the
    method.

    Raises:
        NegativeEntry: any entry < 0.
        ZeroColumn: a column of all zeros.
    """
    values = matrix.values
    neg = np.argwhere(values < 0)
    if neg.size:
        row, col = (int(v) for v in neg[0])
        raise NegativeEntry(row, col)
    sums = values.sum(axis=0)
    zero = np.flatnonzero(sums == 0.0)
    if zero.size:
        raise ZeroColumn(int(zero[0]))
    return NormalizedMatrix(values / sums, matrix.criterion_names)


def _plogp(p: np.ndarray) -> np.ndarray:
    # Shannon convention: 0 * ln 0 = 0
    safe = np.where(p > 0.0, p, 1.0)
    return safe * np.log(safe)


def column_entropy(shares, n_alternatives: int) -> float:
    """Scaled Shannon entropy -1/ln(n) * sum(p ln p) of one share column.

    The column is expected to sum to 1. Equals 1 for a uniform column and
    0 for a one-hot column.
    """
    if n_alternatives < 2:
        raise TooFewAlternatives("entropy scaling needs at least 2 alternatives")
    p = np.asarray(shares, dtype=np.float64)
    k = 1.0 / np.log(n_alternatives)
    return float(-k * _plogp(p).sum())


def entropy_weights(matrix: DecisionMatrix) -> tuple[WeightVector, EntropyBreakdown]:
    """Weights proportional to each criterion's degree of divergence 1 - E.

    Raises:
        AllColumnsUniform: every divergence vanishes, so the weights'
            denominator is zero.
        NegativeEntry, ZeroColumn: propagated from normalization.
    """
    shares = normalize_columns(matrix)
    k = 1.0 / np.log(matrix.n_alternatives)
    entropies = -k * _plogp(shares.values).sum(axis=0)
    divergences = 1.0 - entropies

    # rounding can leave a uniform column a few ulp off d = 0, either side;
    # clamp for the weight quotient so the simplex constraint holds exactly
    usable = np.maximum(divergences, 0.0)
    if (divergences <= _UNIFORM_EPS).all():
        raise AllColumnsUniform("every column is uniform; no divergence to weight")

    weights = usable / usable.sum()
    breakdown = EntropyBreakdown(
        entropy=tuple(float(e) for e in entropies),
        divergence=tuple(float(d) for d in divergences),
        k=float(k),
    )
    return WeightVector(tuple(float(w) for w in weights), "entropy"), breakdown
