"""Possibility-theoretic fusion of numeric classifier outputs.

Score vectors become possibility distributions by dividing through their
maximum, so every distribution handled here satisfies sup pi = 1. The
induced possibility and necessity measures bound the confidence in any
subset of classes, and distributions from several sources are merged
elementwise with one of four operators before an argmax decision.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .frame import Decision, FocalSet, SourceOutput

_NORM_TOL = 1e-9

OPERATORS = ("min", "max", "mean", "median")


@dataclass(frozen=True)
class PossibilityDistribution:
    """Membership-degree vector over the frame, with maximum 1."""

    pi: np.ndarray

    def __post_init__(self) -> None:
        pi = np.array(self.pi, dtype=float)
        if pi.ndim != 1 or pi.size == 0:
            raise ValueError("a distribution is a non-empty vector")
        if not np.all(np.isfinite(pi)):
            raise ValueError("membership degrees must be finite")
        if pi.min() < 0.0 or pi.max() > 1.0:
            raise ValueError("membership degrees must lie in [0, 1]")
        if abs(float(pi.max()) - 1.0) > _NORM_TOL:
            raise ValueError("distribution must be normalized: max membership 1")
        pi.setflags(write=False)
        object.__setattr__(self, "pi", pi)

    @property
    def n(self) -> int:
        return self.pi.size


def to_possibility(output: SourceOutput) -> PossibilityDistribution:
    """Turn a numeric score vector into a normalized possibility distribution.

    Scores are divided by their maximum. An all-zero score vector carries no
    information and maps to the vacuous all-ones distribution.
    """
    if output.scores is None:
        raise ValueError("numeric source output required")
    scores = np.asarray(output.scores, dtype=float)
    if not np.all(np.isfinite(scores)):
        raise ValueError("scores must be finite")
    top = float(scores.max())
    if top <= 0.0:
        return PossibilityDistribution(np.ones_like(scores))
    return PossibilityDistribution(scores / top)


def _check_width(d: PossibilityDistribution, subset: FocalSet) -> None:
    if d.n != subset.frame.n:
        raise ValueError(
            f"distribution over {d.n} classes does not match a frame of "
            f"{subset.frame.n} classes"
        )


def possibility_measure(d: PossibilityDistribution, subset: FocalSet) -> float:
    """Possibility of a subset: the largest membership among its classes."""
    _check_width(d, subset)
    if subset.bits == 0:
        return 0.0
    return float(d.pi[list(subset.indices())].max())


def necessity_measure(d: PossibilityDistribution, subset: FocalSet) -> float:
    """Necessity of a subset: one minus the possibility of its complement."""
    _check_width(d, subset)
    return 1.0 - possibility_measure(d, subset.complement())


def combine(
    dists: list[PossibilityDistribution], op: str
) -> PossibilityDistribution:
    """Merge distributions elementwise, then renormalize by the new maximum.

    "min" behaves conjunctively, "max" disjunctively, "mean" and "median"
    are compromises. Renormalization happens once, after the elementwise
    step, and cannot change the argmax; an all-zero result (possible under
    "min" between disjoint sources) falls back to total ignorance.
    """
    if op not in OPERATORS:
        raise ValueError(f"unknown operator {op!r}, expected one of {OPERATORS}")
    if not dists:
        raise ValueError("at least one distribution is required")
    n = dists[0].n
    if any(d.n != n for d in dists):
        raise ValueError("distributions cover different numbers of classes")
    mat = np.vstack([d.pi for d in dists])
    if op == "min":
        raw = mat.min(axis=0)
    elif op == "max":
        raw = mat.max(axis=0)
    elif op == "mean":
        raw = mat.mean(axis=0)
    else:
        raw = np.median(mat, axis=0)
    top = float(raw.max())
    if top <= 0.0:
        return PossibilityDistribution(np.ones(n))
    return PossibilityDistribution(raw / top)


def decide_possibilistic(d: PossibilityDistribution) -> Decision:
    """Pick the class with the highest membership; ties go to the lowest index."""
    return Decision(int(np.argmax(d.pi)))
