"""Vote-based fusion of symbolic classifier decisions.

Sources cast one vote each; tallies may be plain counts or weighted by
per-source, per-class reliability weights. Three decision rules are
provided: relative majority, absolute majority, and a thresholded
generalization of both.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .frame import CONFLICT, Decision, Frame

_WEIGHT_SUM_TOL = 1e-9


@dataclass(frozen=True)
class VoteWeights:
    """Per-source, per-class vote weights with a global sum of 1."""

    alpha: np.ndarray  # shape (m, n): weight of source j voting for class k

    def __post_init__(self) -> None:
        alpha = np.array(self.alpha, dtype=float)
        if alpha.ndim != 2:
            raise ValueError("weights must form an (m, n) matrix")
        if not np.all(np.isfinite(alpha)):
            raise ValueError("weights must be finite")
        if alpha.min() < 0.0 or alpha.max() > 1.0:
            raise ValueError("weights must lie in [0, 1]")
        if abs(float(alpha.sum()) - 1.0) > _WEIGHT_SUM_TOL:
            raise ValueError("weights must sum to 1 over all sources and classes")
        alpha.setflags(write=False)
        object.__setattr__(self, "alpha", alpha)

    @property
    def m_sources(self) -> int:
        return self.alpha.shape[0]

    @property
    def n_classes(self) -> int:
        return self.alpha.shape[1]


@dataclass(frozen=True)
class VoteTally:
    """Accumulated votes per class, possibly weight-normalized."""

    counts: np.ndarray
    m_sources: int
    weighted: bool = False

    def __post_init__(self) -> None:
        counts = np.array(self.counts, dtype=float)
        if counts.ndim != 1 or counts.size == 0:
            raise ValueError("counts must be a non-empty vector")
        if counts.min() < 0.0:
            raise ValueError("counts must be non-negative")
        counts.setflags(write=False)
        object.__setattr__(self, "counts", counts)


def indicator(label: int, frame: Frame) -> np.ndarray:
    """One-hot vote vector for a single symbolic decision."""
    vec = np.zeros(frame.n)
    vec[frame.check_class(label)] = 1.0
    return vec


def tally(
    labels: Sequence[int], frame: Frame, weights: VoteWeights | None = None
) -> VoteTally:
    """Accumulate the sources' votes, optionally weighted per source and class."""
    idx = [frame.check_class(k) for k in labels]
    m = len(idx)
    counts = np.zeros(frame.n)
    if weights is None:
        for k in idx:
            counts[k] += 1.0
    else:
        if weights.alpha.shape != (m, frame.n):
            raise ValueError(
                f"weight matrix of shape {weights.alpha.shape} does not match "
                f"{m} sources over {frame.n} classes"
            )
        for j, k in enumerate(idx):
            counts[k] += weights.alpha[j, k]
    return VoteTally(counts, m, weighted=weights is not None)


def decide_majority(t: VoteTally) -> Decision:
    """Relative majority: the class with the unique strict maximum of votes.

    A tied maximum, or a tally with no votes at all, decides the conflict
    class instead of picking arbitrarily.
    """
    counts = t.counts
    k = int(np.argmax(counts))
    top = counts[k]
    if top <= 0.0 or int(np.count_nonzero(counts == top)) > 1:
        return CONFLICT
    return Decision(k)


def decide_absolute_majority(t: VoteTally) -> Decision:
    """Absolute majority: a class wins only with strictly more than half the votes."""
    if t.weighted:
        raise ValueError(
            "absolute majority is defined on raw vote counts, not normalized weights"
        )
    k = int(np.argmax(t.counts))
    if t.counts[k] > t.m_sources / 2.0:
        return Decision(k)
    return CONFLICT


def decide_threshold(t: VoteTally, c: float, b: float = 0.0) -> Decision:
    """Generalized rule: the unique maximum must also reach c*m + b votes.

    c = 0, b = 0 recovers the relative-majority rule; c = 1/2 approaches the
    absolute-majority rule. A tally with no votes decides the conflict class
    regardless of the threshold.
    """
    if not 0.0 <= c <= 1.0:
        raise ValueError("threshold coefficient c must lie in [0, 1]")
    counts = t.counts
    k = int(np.argmax(counts))
    top = counts[k]
    if top <= 0.0 or int(np.count_nonzero(counts == top)) > 1:
        return CONFLICT
    if top >= c * t.m_sources + b:
        return Decision(k)
    return CONFLICT
