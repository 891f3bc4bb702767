"""Frame of discernment, focal-set algebra, and shared decision types.

Every fusion method in this package works over the same frame: an ordered
tuple of mutually exclusive class labels. Subsets of the frame are stored
as integer bit sets, which keeps power-set manipulation cheap across the
supported frame widths.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_CLASSES = 16


def make_frame(labels: Iterable[str]) -> "Frame":
    """Build a frame from an ordered collection of distinct class names."""
    return Frame(tuple(labels))


@dataclass(frozen=True)
class Frame:
    """Ordered set of exclusive, exhaustive class labels."""

    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if not labels:
            raise ValueError("a frame needs at least one class")
        if len(labels) > MAX_CLASSES:
            raise ValueError(
                f"at most {MAX_CLASSES} classes are supported, got {len(labels)}"
            )
        if any(not isinstance(lbl, str) or not lbl for lbl in labels):
            raise ValueError("class labels must be non-empty strings")
        if len(set(labels)) != len(labels):
            raise ValueError("class labels must be unique")

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        """Position of a class name within the frame."""
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"unknown class label {label!r}") from None

    def check_class(self, k: int) -> int:
        k = int(k)
        if not 0 <= k < self.n:
            raise ValueError(f"class index {k} out of range for {self.n} classes")
        return k

    def empty(self) -> "FocalSet":
        return FocalSet(self, 0)

    def full(self) -> "FocalSet":
        return FocalSet(self, (1 << self.n) - 1)

    def singleton(self, k: int) -> "FocalSet":
        return FocalSet(self, 1 << self.check_class(k))

    def subset(self, members: Iterable[int | str]) -> "FocalSet":
        """Focal set from a mix of class indices and class names."""
        bits = 0
        for item in members:
            k = self.index(item) if isinstance(item, str) else self.check_class(item)
            bits |= 1 << k
        return FocalSet(self, bits)

    def subsets(self) -> Iterator["FocalSet"]:
        """All 2**n subsets of the frame, empty set first."""
        for bits in range(1 << self.n):
            yield FocalSet(self, bits)


@dataclass(frozen=True)
class FocalSet:
    """Subset of a frame stored as a bit set (bit k set <=> class k present)."""

    frame: Frame
    bits: int

    def __post_init__(self) -> None:
        if not 0 <= self.bits < (1 << self.frame.n):
            raise ValueError("bit set does not fit the frame width")

    def _check(self, other: "FocalSet") -> None:
        if self.frame != other.frame:
            raise ValueError("focal sets belong to different frames")

    def __and__(self, other: "FocalSet") -> "FocalSet":
        self._check(other)
        return FocalSet(self.frame, self.bits & other.bits)

    def __or__(self, other: "FocalSet") -> "FocalSet":
        self._check(other)
        return FocalSet(self.frame, self.bits | other.bits)

    def complement(self) -> "FocalSet":
        """Complement relative to the full frame."""
        return FocalSet(self.frame, self.bits ^ ((1 << self.frame.n) - 1))

    def cardinality(self) -> int:
        return self.bits.bit_count()

    def __len__(self) -> int:
        return self.cardinality()

    def __contains__(self, k: int) -> bool:
        return bool(self.bits >> self.frame.check_class(k) & 1)

    def indices(self) -> tuple[int, ...]:
        return tuple(k for k in range(self.frame.n) if self.bits >> k & 1)

    def members(self) -> tuple[str, ...]:
        return tuple(self.frame.labels[k] for k in self.indices())

    def is_empty(self) -> bool:
        return self.bits == 0

    def issubset(self, other: "FocalSet") -> bool:
        self._check(other)
        return self.bits | other.bits == other.bits

    def __repr__(self) -> str:
        return "{" + ", ".join(self.members()) + "}"


@dataclass(frozen=True)
class Decision:
    """Outcome of a fusion rule: a class index, or the added conflict class.

    The conflict value stands for the extra class appended to the frame when
    a rule cannot single out one of the regular classes.
    """

    index: int | None

    @property
    def is_conflict(self) -> bool:
        return self.index is None

    def label(self, frame: Frame) -> str:
        return "conflict" if self.index is None else frame.labels[self.index]

    def __repr__(self) -> str:
        return "Decision(conflict)" if self.index is None else f"Decision({self.index})"


CONFLICT = Decision(None)


@dataclass(frozen=True)
class SourceOutput:
    """One classifier's report for one sample.

    Numeric outputs carry one score per class in [0, 1]; symbolic outputs
    carry a single decided class index. Exactly one of the two is set.
    """

    scores: tuple[float, ...] | None = None
    label: int | None = None

    def __post_init__(self) -> None:
        if (self.scores is None) == (self.label is None):
            raise ValueError("a source output is either numeric or symbolic")

    @classmethod
    def numeric(cls, frame: Frame, scores: Sequence[float]) -> "SourceOutput":
        arr = np.asarray(scores, dtype=float)
        if arr.shape != (frame.n,):
            raise ValueError(f"expected {frame.n} scores, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("scores must be finite")
        if arr.size and (arr.min() < 0.0 or arr.max() > 1.0):
            raise ValueError("scores must lie in [0, 1]")
        return cls(scores=tuple(float(s) for s in arr))

    @classmethod
    def symbolic(cls, frame: Frame, label: int) -> "SourceOutput":
        return cls(label=frame.check_class(label))

    @property
    def kind(self) -> str:
        return "numeric" if self.scores is not None else "symbolic"
