"""Belief-function machinery: masses, combination, conflict, decisions.

Mass functions allocate one unit of belief over subsets of the frame.
Combining evidence with the unnormalized conjunctive rule leaves
disagreement as mass on the empty set, a direct readout of how much the
sources clash. Decisions use the pignistic probability, a compromise
between the pessimistic belief and the optimistic plausibility.
"""

import numpy as np

from evifuse import (
    MassFunction,
    conjunctive_combine,
    decide_pignistic,
    make_frame,
    vacuous,
)

frame = make_frame(["a", "b"])
a, b, full = frame.singleton(0), frame.singleton(1), frame.full()

print("--- two partially informed sources ---")
m1 = MassFunction(frame, {a: 0.6, full: 0.4})
m2 = MassFunction(frame, {b: 0.5, full: 0.5})
print(f"m1 = {m1}")
print(f"m2 = {m2}")

m = conjunctive_combine(m1, m2)  # equivalently: m1 & m2
print(f"m1 (+) m2 = {m}")
print(f"conflict mass m(empty) = {m.conflict_mass():.3f}")

print("--- belief and plausibility bracket the truth ---")
for subset in (a, b, full):
    print(
        f"{subset!r}: belief {m.belief(subset):.3f}"
        f" <= plausibility {m.plausibility(subset):.3f}"
    )

print("--- pignistic decision ---")
betp = m.pignistic()
print(f"BetP = {np.round(betp, 4).tolist()} -> {decide_pignistic(m).label(frame)}")

print("--- the vacuous mass is neutral ---")
neutral = conjunctive_combine(m, vacuous(frame))
print(f"m (+) vacuous = {neutral}")

print("--- total conflict has no pignistic distribution ---")
opposed = conjunctive_combine(
    MassFunction(frame, {a: 1.0}), MassFunction(frame, {b: 1.0})
)
print(f"fully opposed sources: {opposed}")
print(f"decision: {decide_pignistic(opposed).label(frame)}")
