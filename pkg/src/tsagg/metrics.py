"""Full-length reconstruction and accuracy indicators.

The reconstruction replaces every original step by the value its cluster
representative (after segmentation, the containing segment) assigns to
that in-period position, yielding a matrix of the original shape. Errors
are measured in normalized space: a pooled RMSE over all attributes and
steps, a chronological RMSE per attribute, and a duration-curve RMSE per
attribute where both series are sorted descending before comparison so
only the value distribution matters.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import PeriodFrame
from .errors import DataError
from .hierarchy import ClusterResult
from .representation import RepresentativeSet


@dataclass(frozen=True)
class MetricsReport:
    """Accuracy summary of one aggregation configuration.

    total_steps is the aggregated size (typical periods x segments);
    it and reduction_ratio are None for externally supplied
    reconstructions whose configuration is unknown.
    """

    rmse_tot: float
    chronological_rmse: dict[str, float]
    duration_curve_rmse: dict[str, float]
    total_steps: int | None = None
    reduction_ratio: float | None = None

    def to_json_dict(self) -> dict:
        return {
            "rmse_tot": self.rmse_tot,
            "chronological_rmse": dict(self.chronological_rmse),
            "duration_curve_rmse": dict(self.duration_curve_rmse),
            "total_steps": self.total_steps,
            "reduction_ratio": self.reduction_ratio,
        }


def reconstruct(frame: PeriodFrame, clusters: ClusterResult,
                reps: RepresentativeSet) -> np.ndarray:
    """Expand representatives back to the full horizon, (N_t, N_a)."""
    if clusters.n_samples != frame.n_periods:
        raise DataError(
            f"assignment covers {clusters.n_samples} periods, frame has {frame.n_periods}")
    if reps.k != clusters.k:
        raise DataError(f"{reps.k} representatives for {clusters.k} clusters")
    if reps.segments is not None:
        expanded = np.stack([reps.segments.expand(c) for c in range(reps.k)])
    else:
        expanded = reps.profiles
    rec = expanded[clusters.assignment]
    return rec.reshape(frame.n_periods * frame.steps_per_period, frame.n_attributes)


def _check_shapes(original: np.ndarray, aggregated: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    original = np.asarray(original, dtype=np.float64)
    aggregated = np.asarray(aggregated, dtype=np.float64)
    if original.ndim == 1:
        original = original.reshape(-1, 1)
    if aggregated.ndim == 1:
        aggregated = aggregated.reshape(-1, 1)
    if original.shape != aggregated.shape:
        raise DataError(
            f"shape mismatch: original {original.shape}, aggregated {aggregated.shape}")
    return original, aggregated


def rmse_tot(original: np.ndarray, aggregated: np.ndarray) -> float:
    """Pooled RMSE over all attributes and time steps."""
    original, aggregated = _check_shapes(original, aggregated)
    diff = aggregated - original
    return float(np.sqrt(np.mean(diff * diff)))


def attribute_rmse(original: np.ndarray, aggregated: np.ndarray) -> np.ndarray:
    """Chronological RMSE per attribute."""
    original, aggregated = _check_shapes(original, aggregated)
    diff = aggregated - original
    return np.sqrt(np.mean(diff * diff, axis=0))


def duration_curve_rmse(original: np.ndarray, aggregated: np.ndarray) -> np.ndarray:
    """Per-attribute RMSE between descending-sorted value curves."""
    original, aggregated = _check_shapes(original, aggregated)
    diff = -np.sort(-aggregated, axis=0) + np.sort(-original, axis=0)
    return np.sqrt(np.mean(diff * diff, axis=0))


def build_report(original: np.ndarray, aggregated: np.ndarray,
                 attribute_names, total_steps: int | None = None) -> MetricsReport:
    """Assemble the full report for a reconstruction."""
    original, aggregated = _check_shapes(original, aggregated)
    names = list(attribute_names)
    if len(names) != original.shape[1]:
        raise DataError(f"{len(names)} names for {original.shape[1]} attributes")
    chron = attribute_rmse(original, aggregated)
    duration = duration_curve_rmse(original, aggregated)
    ratio = None
    if total_steps is not None:
        ratio = 1.0 - total_steps / original.shape[0]
    return MetricsReport(
        rmse_tot=rmse_tot(original, aggregated),
        chronological_rmse={n: float(v) for n, v in zip(names, chron)},
        duration_curve_rmse={n: float(v) for n, v in zip(names, duration)},
        total_steps=total_steps,
        reduction_ratio=ratio,
    )
