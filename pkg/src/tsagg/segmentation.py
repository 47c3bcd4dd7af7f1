"""Merge adjacent time steps inside a period into variable-length segments.

Each time step of a period profile is one multi-attribute sample; chain
connectivity restricts Ward clustering to neighbouring steps, so the
resulting clusters are contiguous runs. A segment takes the arithmetic
mean of its member steps per attribute, which conserves the period total.
Boundaries are chosen per period, so two representatives of the same set
may be split differently.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import ConfigError, DataError
from .hierarchy import Connectivity, Linkage, ward_linkage
from .representation import RepresentativeSet


@dataclass(frozen=True)
class Segment:
    """Contiguous run of steps with one value per attribute."""

    start_step: int
    length_steps: int
    values: np.ndarray


@dataclass(frozen=True)
class SegmentLayout:
    """Per-period segment lists; each list partitions [0, steps_per_period)."""

    steps_per_period: int
    periods: tuple[tuple[Segment, ...], ...]

    def __post_init__(self):
        for p, segs in enumerate(self.periods):
            pos = 0
            for seg in segs:
                if seg.start_step != pos or seg.length_steps < 1:
                    raise DataError(f"period {p}: segments do not tile the period")
                pos += seg.length_steps
            if pos != self.steps_per_period:
                raise DataError(
                    f"period {p}: segments cover {pos} of {self.steps_per_period} steps")

    @property
    def n_segments(self) -> int:
        return len(self.periods[0])

    def expand(self, period: int) -> np.ndarray:
        """Piecewise-constant profile of one period, shape (steps, N_a)."""
        return np.concatenate([
            np.broadcast_to(seg.values, (seg.length_steps, seg.values.shape[0]))
            for seg in self.periods[period]
        ])


def segment_linkage(profile: np.ndarray) -> Linkage:
    """Chain-constrained Ward merge history over a period's time steps."""
    profile = np.asarray(profile, dtype=np.float64)
    return ward_linkage(profile, Connectivity.chain(profile.shape[0]))


def cut_segments(profile: np.ndarray, linkage: Linkage, n_segments: int) -> tuple[Segment, ...]:
    """Cut a step linkage at n_segments and average each run of steps."""
    profile = np.asarray(profile, dtype=np.float64)
    steps = profile.shape[0]
    if not 1 <= n_segments <= steps:
        raise ConfigError(f"n_segments={n_segments} out of range [1, {steps}]")
    assignment = linkage.cut(n_segments).assignment
    # chain constraint makes clusters contiguous; boundaries are label changes
    bounds = np.flatnonzero(np.diff(assignment)) + 1
    starts = np.concatenate(([0], bounds))
    ends = np.concatenate((bounds, [steps]))
    return tuple(
        Segment(start_step=int(s), length_steps=int(e - s),
                values=profile[s:e].mean(axis=0))
        for s, e in zip(starts, ends)
    )


def segment_period(profile: np.ndarray, n_segments: int) -> tuple[Segment, ...]:
    """Split one period profile (steps x N_a) into n_segments runs."""
    profile = np.asarray(profile, dtype=np.float64)
    if profile.ndim == 1:
        profile = profile.reshape(-1, 1)
    return cut_segments(profile, segment_linkage(profile), n_segments)


def segment_representatives(reps: RepresentativeSet, n_segments: int) -> RepresentativeSet:
    """Segment every representative period independently."""
    layouts = tuple(
        segment_period(reps.profiles[c], n_segments) for c in range(reps.k)
    )
    layout = SegmentLayout(steps_per_period=reps.steps_per_period, periods=layouts)
    return replace(reps, segments=layout)
