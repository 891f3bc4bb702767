"""Belief-function fusion: mass functions, evidence models, and decisions.

A mass function spreads one unit of belief over subsets of the frame, not
just over single classes. Two evidence models build masses from data:

* the Appriou model turns a source's per-class recognition rate into mass
  on the recognized class, its complement, and the whole frame;
* the Denoeux model lets each labeled prototype support its own class with
  strength decaying in the distance to the query, combined over the k
  nearest prototypes (evidential k-NN).

Evidence is pooled with the unnormalized conjunctive rule of Smets, so
disagreement accumulates as mass on the empty set instead of being
renormalized away. Decisions maximize the pignistic probability, which
splits each focal element's mass uniformly over its members.
"""

from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, Sequence

import numpy as np

from .frame import CONFLICT, Decision, FocalSet, Frame

_SUM_TOL = 1e-9
_DUST = 1e-12  # combination products below this absolute mass are dropped


class MassFunction:
    """Sparse mass assignment over subsets of a frame.

    Total mass must be 1. The empty set may carry mass (the conflict left
    behind by the unnormalized conjunctive rule); zero-mass entries are
    never stored.
    """

    __slots__ = ("frame", "_masses")

    def __init__(
        self,
        frame: Frame,
        masses: Mapping[FocalSet, float] | Iterable[tuple[FocalSet, float]],
    ) -> None:
        items = masses.items() if isinstance(masses, Mapping) else masses
        acc: dict[int, float] = {}
        for fs, value in items:
            if fs.frame != frame:
                raise ValueError("focal set belongs to a different frame")
            value = float(value)
            if value < 0.0:
                raise ValueError(f"negative mass {value} on {fs!r}")
            if value == 0.0:
                continue
            acc[fs.bits] = acc.get(fs.bits, 0.0) + value
        self._init_from_bits(frame, acc)

    def _init_from_bits(self, frame: Frame, acc: dict[int, float]) -> None:
        total = math.fsum(acc.values())
        if abs(total - 1.0) > _SUM_TOL:
            raise ValueError(f"masses sum to {total!r}, expected 1")
        object.__setattr__(self, "frame", frame)
        object.__setattr__(self, "_masses", acc)

    @classmethod
    def _from_bits(cls, frame: Frame, acc: dict[int, float]) -> "MassFunction":
        m = object.__new__(cls)
        m._init_from_bits(frame, acc)
        return m

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("mass functions are immutable")

    def mass(self, subset: FocalSet) -> float:
        if subset.frame != self.frame:
            raise ValueError("focal set belongs to a different frame")
        return self._masses.get(subset.bits, 0.0)

    __getitem__ = mass

    def items(self) -> Iterator[tuple[FocalSet, float]]:
        for bits, value in self._masses.items():
            yield FocalSet(self.frame, bits), value

    def focal_sets(self) -> list[FocalSet]:
        return [FocalSet(self.frame, bits) for bits in self._masses]

    def __len__(self) -> int:
        return len(self._masses)

    def conflict_mass(self) -> float:
        """Mass on the empty set, the disagreement left by combination."""
        return self._masses.get(0, 0.0)

    def belief(self, subset: FocalSet) -> float:
        """Total mass of the non-empty focal elements contained in the subset."""
        if subset.frame != self.frame:
            raise ValueError("focal set belongs to a different frame")
        a = subset.bits
        return math.fsum(
            v for bits, v in self._masses.items() if bits and bits | a == a
        )

    def plausibility(self, subset: FocalSet) -> float:
        """Total mass of the focal elements intersecting the subset."""
        if subset.frame != self.frame:
            raise ValueError("focal set belongs to a different frame")
        a = subset.bits
        return math.fsum(v for bits, v in self._masses.items() if bits & a)

    def pignistic(self) -> np.ndarray:
        """Pignistic probability vector over the classes.

        Each non-empty focal element shares its mass uniformly among its
        members; the result is rescaled by 1 - m(empty) so it sums to 1.
        Undefined when all mass sits on the empty set.
        """
        scale = 1.0 - self._masses.get(0, 0.0)
        if scale <= 0.0:
            raise ValueError("total conflict: no pignistic distribution exists")
        out = np.zeros(self.frame.n)
        for bits, value in self._masses.items():
            if bits == 0:
                continue
            share = value / bits.bit_count()
            k = 0
            while bits:
                if bits & 1:
                    out[k] += share
                bits >>= 1
                k += 1
        out /= scale
        return out

    def __and__(self, other: "MassFunction") -> "MassFunction":
        return conjunctive_combine(self, other)

    def __repr__(self) -> str:
        parts = ", ".join(
            f"{FocalSet(self.frame, bits)!r}: {value:.6g}"
            for bits, value in sorted(self._masses.items())
        )
        return f"MassFunction({parts})"


def vacuous(frame: Frame) -> MassFunction:
    """Total ignorance: all mass on the full frame."""
    return MassFunction._from_bits(frame, {(1 << frame.n) - 1: 1.0})


def conjunctive_combine(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """Unnormalized conjunctive rule: intersect focal pairs, multiply masses.

    Disagreement lands on the empty set and is kept there; nothing is
    renormalized. Dust entries below 1e-12 are dropped to keep repeated
    combinations sparse.
    """
    if m1.frame != m2.frame:
        raise ValueError("mass functions are defined over different frames")
    acc: dict[int, float] = {}
    for b1, v1 in m1._masses.items():
        for b2, v2 in m2._masses.items():
            k = b1 & b2
            acc[k] = acc.get(k, 0.0) + v1 * v2
    acc = {bits: v for bits, v in acc.items() if v >= _DUST}
    return MassFunction._from_bits(m1.frame, acc)


def combine_all(masses: Sequence[MassFunction]) -> MassFunction:
    """Conjunctively combine any number of mass functions (at least one)."""
    if not masses:
        raise ValueError("at least one mass function is required")
    return reduce(conjunctive_combine, masses)


def decide_pignistic(m: MassFunction) -> Decision:
    """Pick the class with the highest pignistic probability.

    Ties go to the lowest class index; a fully conflicting mass (all mass
    on the empty set) yields the conflict decision.
    """
    if 1.0 - m.conflict_mass() <= 0.0:
        return CONFLICT
    return Decision(int(np.argmax(m.pignistic())))


# ---------------------------------------------------------------------------
# Appriou model: masses from per-class recognition rates


@dataclass(frozen=True)
class AppriouParams:
    """Recognition-rate parameters for the Appriou evidence model.

    cond_prob[j, i] is the probability that source j answers correctly when
    the true class is i, r[j] the reciprocal of source j's best rate, and
    alpha[j, i] a discount moving mass toward ignorance for shaky sources.
    """

    frame: Frame
    cond_prob: np.ndarray  # (m, n)
    r: np.ndarray  # (m,)
    alpha: np.ndarray  # (m, n)

    def __post_init__(self) -> None:
        cond = np.array(self.cond_prob, dtype=float)
        r = np.array(self.r, dtype=float)
        alpha = np.array(self.alpha, dtype=float)
        if cond.ndim != 2 or cond.shape[1] != self.frame.n:
            raise ValueError("cond_prob must be an (m, n) matrix over the frame")
        m = cond.shape[0]
        if r.shape != (m,) or alpha.shape != (m, self.frame.n):
            raise ValueError("r and alpha shapes must match cond_prob")
        if cond.min() < 0.0 or cond.max() > 1.0:
            raise ValueError("conditional probabilities must lie in [0, 1]")
        if alpha.min() < 0.0 or alpha.max() > 1.0:
            raise ValueError("discounts must lie in [0, 1]")
        maxes = cond.max(axis=1)
        if np.any(maxes <= 0.0):
            raise ValueError(
                "every source needs one class it recognizes with positive probability"
            )
        if np.max(np.abs(r * maxes - 1.0)) > _SUM_TOL:
            raise ValueError("r must be the reciprocal of each source's best rate")
        for arr in (cond, r, alpha):
            arr.setflags(write=False)
        object.__setattr__(self, "cond_prob", cond)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "alpha", alpha)

    @property
    def m_sources(self) -> int:
        return self.cond_prob.shape[0]


def appriou_raw_masses(
    p: float, r: float, alpha: float, as_printed: bool = False
) -> tuple[float, float, float]:
    """Raw Appriou mass triple (class, complement, frame), not renormalized.

    The corrected complement mass alpha / (1 + r*p) makes the triple sum to
    1 for any r. The widely circulated variant alpha*r / (1 + r*p), kept
    behind ``as_printed`` for comparison, only sums to 1 when r = 1.
    """
    denom = 1.0 + r * p
    m_class = alpha * r * p / denom
    m_other = alpha * r / denom if as_printed else alpha / denom
    return m_class, m_other, 1.0 - alpha


def appriou_mass(
    j: int, i: int, params: AppriouParams, as_printed: bool = False
) -> MassFunction:
    """Mass contributed by source j for the hypothesis "class i".

    Focal elements are the singleton {C_i}, its complement, and the full
    frame. With ``as_printed`` the non-additive variant is used and the
    triple is renormalized to keep the result a valid mass function.
    """
    frame = params.frame
    if not 0 <= j < params.m_sources:
        raise ValueError(f"source index {j} out of range")
    i = frame.check_class(i)
    p = float(params.cond_prob[j, i])
    r = float(params.r[j])
    alpha = float(params.alpha[j, i])
    m_class, m_other, m_frame = appriou_raw_masses(p, r, alpha, as_printed)
    if as_printed:
        total = m_class + m_other + m_frame
        m_class, m_other, m_frame = m_class / total, m_other / total, m_frame / total
    single = frame.singleton(i)
    return MassFunction(
        frame,
        [(single, m_class), (single.complement(), m_other), (frame.full(), m_frame)],
    )


# ---------------------------------------------------------------------------
# Denoeux model: masses from distances to labeled prototypes


@dataclass(frozen=True)
class TrainingSet:
    """Labeled prototype vectors driving the distance-based evidence model.

    gamma holds one positive scale per class; when omitted it is fitted as
    the reciprocal of the mean pairwise distance among the prototypes of
    each class (classes with fewer than two prototypes, or zero spread,
    fall back to the global mean distance, then to 1).
    """

    frame: Frame
    prototypes: np.ndarray  # (t, d)
    classes: np.ndarray  # (t,)
    k: int = 1
    alpha: float = 0.95
    gamma: np.ndarray | None = None

    def __post_init__(self) -> None:
        protos = np.array(self.prototypes, dtype=float)
        classes = np.array(self.classes, dtype=int)
        if protos.ndim != 2 or protos.shape[0] == 0:
            raise ValueError("prototypes must form a non-empty (t, d) matrix")
        if classes.shape != (protos.shape[0],):
            raise ValueError("one class per prototype is required")
        if classes.min() < 0 or classes.max() >= self.frame.n:
            raise ValueError("prototype classes must index the frame")
        if not 1 <= self.k <= protos.shape[0]:
            raise ValueError("k must lie between 1 and the number of prototypes")
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError("alpha must lie in [0, 1]")
        if self.gamma is None:
            gamma = default_gamma(protos, classes, self.frame.n)
        else:
            gamma = np.array(self.gamma, dtype=float)
            if gamma.shape != (self.frame.n,):
                raise ValueError("one gamma per class is required")
            if gamma.min() <= 0.0 or not np.all(np.isfinite(gamma)):
                raise ValueError("gamma scales must be positive and finite")
        for arr in (protos, classes, gamma):
            arr.setflags(write=False)
        object.__setattr__(self, "prototypes", protos)
        object.__setattr__(self, "classes", classes)
        object.__setattr__(self, "gamma", gamma)

    @property
    def size(self) -> int:
        return self.prototypes.shape[0]


def _mean_pairwise_distance(x: np.ndarray) -> float | None:
    """Mean Euclidean distance over all point pairs; None if degenerate."""
    t = x.shape[0]
    if t < 2:
        return None
    sq = np.sum(x * x, axis=1)
    d2 = sq[:, None] + sq[None, :] - 2.0 * (x @ x.T)
    iu = np.triu_indices(t, k=1)
    mean = float(np.sqrt(np.maximum(d2[iu], 0.0)).mean())
    return mean if mean > 0.0 else None


def default_gamma(
    prototypes: np.ndarray, classes: np.ndarray, n_classes: int
) -> np.ndarray:
    """Per-class distance scales from mean within-class pairwise distances."""
    global_mean = _mean_pairwise_distance(prototypes)
    fallback = 1.0 / global_mean if global_mean is not None else 1.0
    gamma = np.full(n_classes, fallback)
    for i in range(n_classes):
        mean = _mean_pairwise_distance(prototypes[classes == i])
        if mean is not None:
            gamma[i] = 1.0 / mean
    return gamma


def denoeux_mass(x: Sequence[float], t: int, ts: TrainingSet) -> MassFunction:
    """Evidence from one prototype: support for its class, rest on the frame.

    The support is alpha * exp(-gamma_i * d^2) with d the Euclidean distance
    between the query and the prototype, so a coincident prototype commits
    alpha to its class and a remote one commits nothing.
    """
    x = np.asarray(x, dtype=float)
    if not 0 <= t < ts.size:
        raise ValueError(f"prototype index {t} out of range")
    proto = ts.prototypes[t]
    if x.shape != proto.shape:
        raise ValueError(f"query of shape {x.shape} does not match {proto.shape}")
    d2 = float(np.sum((x - proto) ** 2))
    i = int(ts.classes[t])
    support = ts.alpha * math.exp(-float(ts.gamma[i]) * d2)
    return MassFunction(
        ts.frame,
        [(ts.frame.singleton(i), support), (ts.frame.full(), 1.0 - support)],
    )


def denoeux_classify_mass(x: Sequence[float], ts: TrainingSet) -> MassFunction:
    """Combined evidence of the k prototypes nearest to the query.

    Distance ties are broken toward the lower prototype index, which keeps
    classification deterministic.
    """
    x = np.asarray(x, dtype=float)
    if x.shape != ts.prototypes.shape[1:]:
        raise ValueError(
            f"query of shape {x.shape} does not match {ts.prototypes.shape[1:]}"
        )
    diff = ts.prototypes - x
    d2 = np.einsum("td,td->t", diff, diff)
    nearest = np.argsort(d2, kind="stable")[: ts.k]
    return combine_all([denoeux_mass(x, int(t), ts) for t in nearest])
