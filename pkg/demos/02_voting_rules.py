"""Voting fusion of symbolic decisions: three rules on a small committee.

Relative majority picks the most voted class but returns the extra
conflict class on ties; absolute majority additionally demands more than
half the votes; the threshold rule generalizes both with a configurable
bar. Weighted tallies use calibrated per-source, per-class weights.
"""

import numpy as np

from evifuse import (
    VoteWeights,
    decide_absolute_majority,
    decide_majority,
    decide_threshold,
    make_frame,
    tally,
)

frame = make_frame(["a", "b", "c"])

print("--- unweighted committee of five ---")
votes = [0, 0, 1, 0, 2]
t = tally(votes, frame)
print(f"votes {votes} -> counts {t.counts.tolist()}")
print(f"relative majority: {decide_majority(t).label(frame)}")
print(f"absolute majority: {decide_absolute_majority(t).label(frame)}")
print(f"threshold c=0.8:   {decide_threshold(t, c=0.8).label(frame)}")

print("--- a tied committee ---")
t = tally([0, 0, 1, 1], frame)
print(f"counts {t.counts.tolist()}")
print(f"relative majority: {decide_majority(t).label(frame)}")
print(f"absolute majority: {decide_absolute_majority(t).label(frame)}")

print("--- weighted vote dissolves the tie ---")
# Source 0 is trusted twice as much on class 'a' as source 2 is on 'b'.
alpha = np.array(
    [
        [0.30, 0.05, 0.05],
        [0.20, 0.05, 0.05],
        [0.05, 0.10, 0.05],
        [0.02, 0.05, 0.03],
    ]
)
weights = VoteWeights(alpha)
t = tally([0, 0, 1, 1], frame, weights)
print(f"weighted counts {np.round(t.counts, 3).tolist()}")
print(f"decision: {decide_threshold(t, c=0.0).label(frame)}")
