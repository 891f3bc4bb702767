"""Benchmark protocol: repeated three-way splits, fusion, and metrics.

Each trial randomly permutes the dataset into three equal parts. The first
part is reserved (it mirrors the split that would train the sources
themselves), the second fits all calibration artifacts, and the third is
the test bed. Metrics are averaged over the trials; per-class rates are
pooled over trials so rare classes with empty trial slices stay defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import belief, possibility, voting
from .calibration import build_confusion, conditional_probs, vote_weights
from .frame import Decision, Frame, SourceOutput
from .simulate import Dataset, FusionSettings, SimConfig, simulate, trial_stream

METHODS = (
    "vote_majority",
    "vote_absolute",
    "vote_weighted",
    "possibility_min",
    "possibility_max",
    "possibility_mean",
    "possibility_median",
    "belief_appriou",
    "belief_denoeux",
)


def normalize_methods(methods: Sequence[str], settings: FusionSettings) -> list[str]:
    """Validate method names; bare "possibility" picks up the configured operator."""
    out: list[str] = []
    for name in methods:
        name = name.strip()
        if name == "possibility":
            name = f"possibility_{settings.possibility_operator}"
        if name not in METHODS:
            raise ValueError(f"unknown method {name!r}, expected one of {METHODS}")
        if name not in out:
            out.append(name)
    if not out:
        raise ValueError("at least one fusion method is required")
    return out


@dataclass(frozen=True)
class MethodResult:
    """Averaged metrics for one fusion method."""

    accuracy: float
    per_class: dict[str, float]
    conflict_rate: float
    mean_conflict_mass: float


@dataclass(frozen=True)
class ExperimentReport:
    """Cross-trial summary of one benchmark run."""

    seed: int
    n_trials: int
    methods: dict[str, MethodResult]
    source_accuracy: dict[str, float]


class _Accumulator:
    """Running sums for one method across trials."""

    def __init__(self, n_classes: int) -> None:
        self.trial_accuracy: list[float] = []
        self.trial_conflict_rate: list[float] = []
        self.trial_conflict_mass: list[float] = []
        self.class_correct = np.zeros(n_classes)
        self.class_total = np.zeros(n_classes)

    def add_trial(
        self, truth: np.ndarray, decided: np.ndarray, conflict_mass_sum: float
    ) -> None:
        n_test = truth.shape[0]
        correct = decided == truth
        self.trial_accuracy.append(float(correct.mean()))
        self.trial_conflict_rate.append(float((decided < 0).mean()))
        self.trial_conflict_mass.append(conflict_mass_sum / n_test)
        np.add.at(self.class_total, truth, 1.0)
        np.add.at(self.class_correct, truth, correct.astype(float))

    def result(self, frame: Frame) -> MethodResult:
        per_class = {}
        for i, label in enumerate(frame.labels):
            total = self.class_total[i]
            per_class[label] = float(self.class_correct[i] / total) if total else 0.0
        return MethodResult(
            accuracy=float(np.mean(self.trial_accuracy)),
            per_class=per_class,
            conflict_rate=float(np.mean(self.trial_conflict_rate)),
            mean_conflict_mass=float(np.mean(self.trial_conflict_mass)),
        )


def _decision_index(d: Decision) -> int:
    return -1 if d.is_conflict else d.index


def _make_runners(
    ds: Dataset,
    methods: Sequence[str],
    settings: FusionSettings,
    calib_idx: np.ndarray,
) -> dict[str, Callable[[int], tuple[Decision, float]]]:
    """Per-method closures mapping a sample index to (decision, conflict mass)."""
    frame = ds.frame
    runners: dict[str, Callable[[int], tuple[Decision, float]]] = {}

    need_confusion = {"vote_weighted", "belief_appriou"} & set(methods)
    if need_confusion:
        cms = [
            build_confusion(
                list(zip(ds.truth[calib_idx], ds.labels[calib_idx, j])),
                frame,
                source_id=ds.source_ids[j],
            )
            for j in range(ds.m_sources)
        ]

    for name in methods:
        if name == "vote_majority":

            def run(i: int) -> tuple[Decision, float]:
                return voting.decide_majority(voting.tally(ds.labels[i], frame)), 0.0

        elif name == "vote_absolute":

            def run(i: int) -> tuple[Decision, float]:
                t = voting.tally(ds.labels[i], frame)
                return voting.decide_absolute_majority(t), 0.0

        elif name == "vote_weighted":
            weights = vote_weights(cms)

            def run(i: int, weights=weights) -> tuple[Decision, float]:
                t = voting.tally(ds.labels[i], frame, weights)
                return voting.decide_threshold(t, settings.vote_c, settings.vote_b), 0.0

        elif name.startswith("possibility_"):
            op = name.removeprefix("possibility_")

            def run(i: int, op=op) -> tuple[Decision, float]:
                dists = [
                    possibility.to_possibility(
                        SourceOutput.numeric(frame, ds.scores[i, j])
                    )
                    for j in range(ds.m_sources)
                ]
                return possibility.decide_possibilistic(
                    possibility.combine(dists, op)
                ), 0.0

        elif name == "belief_appriou":
            params = conditional_probs(cms)

            def run(i: int, params=params) -> tuple[Decision, float]:
                masses = [
                    belief.appriou_mass(
                        j, int(ds.labels[i, j]), params, settings.appriou_as_printed
                    )
                    for j in range(ds.m_sources)
                ]
                m = belief.combine_all(masses)
                return belief.decide_pignistic(m), m.conflict_mass()

        elif name == "belief_denoeux":
            k = min(settings.denoeux_k, calib_idx.shape[0])
            ts = belief.TrainingSet(
                frame,
                ds.scores[calib_idx].reshape(calib_idx.shape[0], -1),
                ds.truth[calib_idx],
                k=k,
                alpha=settings.denoeux_alpha,
            )

            def run(i: int, ts=ts) -> tuple[Decision, float]:
                m = belief.denoeux_classify_mass(ds.scores[i].ravel(), ts)
                return belief.decide_pignistic(m), m.conflict_mass()

        else:  # pragma: no cover - normalize_methods guards this
            raise ValueError(f"unknown method {name!r}")

        runners[name] = run
    return runners


def evaluate_dataset(
    ds: Dataset,
    methods: Sequence[str],
    settings: FusionSettings | None = None,
    n_trials: int = 10,
    seed: int = 0,
) -> ExperimentReport:
    """Run the repeated split protocol over an existing dataset."""
    settings = settings or FusionSettings()
    methods = normalize_methods(methods, settings)
    if n_trials < 1:
        raise ValueError("n_trials must be at least 1")
    third = ds.n_samples // 3
    if third < 1:
        raise ValueError("dataset too small to split into three non-empty parts")

    accs = {name: _Accumulator(ds.frame.n) for name in methods}
    source_rates = np.zeros(ds.m_sources)
    for trial in range(n_trials):
        rng = trial_stream(seed, trial)
        perm = rng.permutation(ds.n_samples)
        calib_idx = perm[third : 2 * third]
        test_idx = perm[2 * third : 3 * third]
        runners = _make_runners(ds, methods, settings, calib_idx)
        truth = ds.truth[test_idx]
        for name, run in runners.items():
            decided = np.empty(test_idx.shape[0], dtype=np.int64)
            conflict_sum = 0.0
            for pos, i in enumerate(test_idx):
                decision, cmass = run(int(i))
                decided[pos] = _decision_index(decision)
                conflict_sum += cmass
            accs[name].add_trial(truth, decided, conflict_sum)
        source_rates += (ds.labels[test_idx] == truth[:, None]).mean(axis=0)

    source_accuracy = {
        sid: float(source_rates[j] / n_trials) for j, sid in enumerate(ds.source_ids)
    }
    return ExperimentReport(
        seed=seed,
        n_trials=n_trials,
        methods={name: accs[name].result(ds.frame) for name in methods},
        source_accuracy=source_accuracy,
    )


def run_experiment(config: SimConfig, methods: Sequence[str]) -> ExperimentReport:
    """Simulate the scenario, then run the repeated split protocol on it."""
    ds = simulate(config)
    return evaluate_dataset(
        ds,
        methods,
        settings=config.fusion,
        n_trials=config.n_trials,
        seed=config.seed,
    )
