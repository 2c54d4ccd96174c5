"""Density-interval partitions: construction, validation, quantization."""

import json
from dataclasses import dataclass, field

import numpy as np

# Verbatim border lists for the two interleaved branches (densities in
# persons per patch).  Branch 1 has 25 intervals, branch 2 has 26; the last
# interval of each is open-ended.
UEP_BORDERS_BRANCH1 = [
    0, 0.0019, 0.0081, 0.0165, 0.0272, 0.0404, 0.056, 0.076, 0.099, 0.126,
    0.159, 0.199, 0.246, 0.303, 0.371, 0.454, 0.556, 0.684, 0.848, 1.06,
    1.36, 1.8, 2.5, 3.9, 8.2,
]
UEP_BORDERS_BRANCH2 = [
    0, 0.00087, 0.0046, 0.0119, 0.0214, 0.0333, 0.048, 0.065, 0.086, 0.112,
    0.142, 0.178, 0.221, 0.272, 0.334, 0.409, 0.501, 0.615, 0.759, 0.945,
    1.197, 1.55, 2.1, 3.0, 4.5, 8.5,
]


def _midpoint_reps(borders):
    """Representation value per interval: midpoint for finite intervals,
    the lower border for the final open-ended one."""
    borders = np.asarray(borders, dtype=np.float64)
    reps = np.empty(len(borders))
    reps[:-1] = 0.5 * (borders[:-1] + borders[1:])
    reps[-1] = borders[-1]
    return reps


@dataclass(frozen=True)
class IntervalPartition:
    """Ascending density borders plus one representation value per interval.

    Interval j is the half-open range [borders[j], borders[j+1]); the last
    interval is [borders[-1], +inf).  Immutable and safe to share.
    """

    borders: np.ndarray
    reps: np.ndarray

    def __post_init__(self):
        borders = np.asarray(self.borders, dtype=np.float64)
        reps = np.asarray(self.reps, dtype=np.float64)
        object.__setattr__(self, "borders", borders)
        object.__setattr__(self, "reps", reps)
        if borders.ndim != 1 or len(borders) < 1:
            raise ValueError("borders must be a non-empty 1-D sequence")
        if borders[0] != 0:
            raise ValueError("first border must be 0, got %r" % borders[0])
        if np.any(np.diff(borders) <= 0):
            raise ValueError("borders must be strictly ascending")
        if len(reps) != len(borders):
            raise ValueError(
                "need one representation value per interval: "
                "%d reps vs %d borders" % (len(reps), len(borders))
            )
        if np.any(reps < borders):
            raise ValueError("each rep must be >= its interval's lower border")
        if np.any(reps[:-1] >= borders[1:]):
            raise ValueError("each rep must fall below the next border")

    @property
    def count(self):
        return len(self.borders)

    def to_json(self):
        return json.dumps({"borders": self.borders.tolist(),
                           "reps": self.reps.tolist()})

    @classmethod
    def from_json(cls, text):
        doc = json.loads(text)
        return cls(borders=np.asarray(doc["borders"]),
                   reps=np.asarray(doc["reps"]))


@dataclass(frozen=True)
class DualPartition:
    """Two parallel partitions; when interleaved, branch-2 borders fall
    strictly between consecutive branch-1 borders wherever both exist."""

    branch1: IntervalPartition
    branch2: IntervalPartition
    interleaved: bool = True

    def __post_init__(self):
        if self.interleaved:
            b1 = self.branch1.borders
            b2 = self.branch2.borders
            n = min(len(b1), len(b2))
            for k in range(1, n):
                if not (b1[k - 1] < b2[k] < b1[k]):
                    raise ValueError(
                        "interleaving violated at border %d: %g not in (%g, %g)"
                        % (k, b2[k], b1[k - 1], b1[k])
                    )


def build_uep_partition(branch, scale=1.0, rep_overrides=None):
    """Partition with the built-in uniform-error border list for one branch,
    every border multiplied by ``scale``.

    ``rep_overrides``, when given, replaces the midpoint representation
    values wholesale (same length as the border list).
    """
    if branch not in (1, 2):
        raise ValueError("branch must be 1 or 2, got %r" % branch)
    if scale <= 0:
        raise ValueError("scale must be positive")
    base = UEP_BORDERS_BRANCH1 if branch == 1 else UEP_BORDERS_BRANCH2
    borders = np.asarray(base, dtype=np.float64) * scale
    reps = (np.asarray(rep_overrides, dtype=np.float64)
            if rep_overrides is not None else _midpoint_reps(borders))
    return IntervalPartition(borders=borders, reps=reps)


def build_dual_uep(scale=1.0):
    """The paper pair: interleaved 25- and 26-interval partitions."""
    return DualPartition(branch1=build_uep_partition(1, scale),
                         branch2=build_uep_partition(2, scale),
                         interleaved=True)


def build_uniform_len(max_density, count):
    """Equal-length intervals: borders [0, s, 2s, ..., (count-1)*s]."""
    if count < 2:
        raise ValueError("count must be >= 2, got %d" % count)
    if max_density <= 0:
        raise ValueError("max_density must be positive")
    step = max_density / (count - 1)
    borders = step * np.arange(count)
    return IntervalPartition(borders=borders, reps=_midpoint_reps(borders))


def build_uniform_num(sample_densities, count):
    """Equal-population intervals: interior borders at the empirical
    quantiles of the positive samples, so each interval holds an equal
    share of them."""
    if count < 2:
        raise ValueError("count must be >= 2, got %d" % count)
    sample = np.asarray(sample_densities, dtype=np.float64)
    positives = np.sort(sample[sample > 0])
    if len(np.unique(positives)) < count:
        raise ValueError(
            "need at least %d distinct positive samples, got %d"
            % (count, len(np.unique(positives)))
        )
    qs = np.arange(1, count) / count
    interior = np.quantile(positives, qs)
    borders = np.concatenate([[0.0], interior])
    if np.any(np.diff(borders) <= 0):
        raise ValueError("degenerate sample: quantile borders not ascending")
    return IntervalPartition(borders=borders, reps=_midpoint_reps(borders))


def quantize(density, partition):
    """Index j with borders[j] <= density < borders[j+1] (last interval
    open-ended).  Accepts scalars or arrays."""
    d = np.asarray(density, dtype=np.float64)
    if np.any(d < 0):
        raise ValueError("density must be nonnegative")
    idx = np.searchsorted(partition.borders, d, side="right") - 1
    if np.ndim(density) == 0:
        return int(idx)
    return idx.astype(np.int64)
