"""
The canonical dual is not always the best dual
===============================================

Three vectors in the plane, with erasure probabilities 1/2, 1/3 and 1/6.
We compare the canonical dual against the rest of the dual family.
"""

import numpy as np

from frameduals import MeasureSpec, canonical_dual, max_measure, named_example, optimize_dual
from frameduals.construct import example_dual

F, q = named_example("example_5")
print("frame vectors:\n", F.vectors.real)
print("weights q:", q.q)

# the canonical dual S^-1 F
C = canonical_dual(F)
print("canonical dual:\n", C.vectors.real)

# worst-case error for one erasure, as spectral radius (lam = 1) and norm (lam = 0)
for lam in (1.0, 0.0):
    r = max_measure(F, C, q, MeasureSpec(lam))
    print(f"lam = {lam}: {r.value:.6f} at location {r.argmax}")

# every dual is C + [[a, a, -a], [b, b, -b]]; try a = b = -1/6
G = example_dual(-1 / 6, -1 / 6)
for lam in (1.0, 0.0):
    print(f"alpha = beta = -1/6, lam = {lam}:", round(max_measure(F, G, q, MeasureSpec(lam)).value, 6))

# and let the optimizer search the whole family
for lam in (0.0, 0.5, 1.0):
    res = optimize_dual(F, q, lam)
    print(f"lam = {lam}: canonical {res.canonical_value:.6f} -> best {res.best_value:.6f}")

res = optimize_dual(F, q, 0.0)
print("best operator-norm dual:\n", np.round(res.best_dual.vectors.real, 6))
