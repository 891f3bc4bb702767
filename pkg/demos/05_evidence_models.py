"""The two evidence models: recognition rates and distances.

The Appriou model reads a source's confusion matrix: when the source
announces a class it recognizes reliably, mass concentrates on that class;
an unreliable announcement pushes mass toward the complement and the
frame. The Denoeux model is an evidential k-NN: each nearby labeled
prototype supports its own class with strength exp(-gamma * d^2).
"""

import numpy as np

from evifuse import (
    TrainingSet,
    appriou_mass,
    build_confusion,
    combine_all,
    conditional_probs,
    decide_pignistic,
    denoeux_classify_mass,
    make_frame,
)

frame = make_frame(["a", "b", "c"])
rng = np.random.default_rng(3)

print("--- Appriou masses from a confusion matrix ---")
# Source 1 is sharp, source 2 mediocre; both are calibrated on 60 samples.
truth = rng.integers(0, 3, size=60)
pred1 = np.where(rng.random(60) < 0.9, truth, (truth + 1) % 3)
pred2 = np.where(rng.random(60) < 0.6, truth, (truth + 1) % 3)
cms = [
    build_confusion(list(zip(truth, pred1)), frame, "sharp"),
    build_confusion(list(zip(truth, pred2)), frame, "mediocre"),
]
params = conditional_probs(cms)
print(f"recognition rates:\n{np.round(params.cond_prob, 3)}")
print(f"normalization factors r = {np.round(params.r, 3).tolist()}")

# Both sources announce class 'a'. Note that r measures confidence relative
# to each source's own best class, so the announced mass is not simply
# ordered by raw accuracy.
for j, name in enumerate(("sharp", "mediocre")):
    m = appriou_mass(j, 0, params)
    print(f"{name:9s} announces 'a' -> {m}")

masses = [appriou_mass(j, 0, params) for j in range(2)]
fused = combine_all(masses)
print(f"fused decision: {decide_pignistic(fused).label(frame)}")
print(f"conflict mass:  {fused.conflict_mass():.3f}")

print("--- Denoeux evidential k-NN on a toy plane ---")
# Three Gaussian blobs, one per class.
centers = np.array([[0.0, 0.0], [3.0, 0.0], [1.5, 2.5]])
protos = np.vstack([rng.normal(c, 0.5, size=(15, 2)) for c in centers])
labels = np.repeat([0, 1, 2], 15)
ts = TrainingSet(frame, protos, labels, k=5, alpha=0.95)
print(f"fitted per-class scales gamma = {np.round(ts.gamma, 3).tolist()}")

for query in ([0.2, -0.1], [2.8, 0.3], [1.5, 1.2]):
    m = denoeux_classify_mass(query, ts)
    betp = np.round(m.pignistic(), 3)
    print(
        f"query {query} -> BetP {betp.tolist()}"
        f" -> {decide_pignistic(m).label(frame)}"
        f" (conflict {m.conflict_mass():.3f})"
    )
