"""Tour of the frame of discernment and its focal-set algebra.

Every fusion method in evifuse reasons over the same frame: an ordered set
of exclusive class labels. Subsets of the frame ("focal sets") are the
unit of belief-function bookkeeping.
"""

from evifuse import make_frame

frame = make_frame(["sand", "rock", "ripple", "silt"])
print(f"frame with {frame.n} classes: {frame.labels}")

# Singletons and subsets can be built from indices or label names.
rock = frame.singleton(1)
coarse = frame.subset(["sand", "rock"])
print(f"rock singleton:        {rock}")
print(f"coarse sediments:      {coarse}")

# The usual set algebra, with the complement taken relative to the frame.
print(f"intersection:          {rock & coarse}")
print(f"union with ripple:     {coarse | frame.singleton(2)}")
print(f"complement of coarse:  {coarse.complement()}")
print(f"|coarse| = {len(coarse)}, |complement| = {len(coarse.complement())}")

# Complementation is an involution and cardinalities always add up to n.
for subset in frame.subsets():
    assert subset.complement().complement() == subset
    assert len(subset) + len(subset.complement()) == frame.n
print(f"checked involution and cardinality over all {2 ** frame.n} subsets")

# Membership tests and enumeration.
print(f"'rock' in coarse: {1 in coarse}")
print(f"members of complement: {coarse.complement().members()}")
