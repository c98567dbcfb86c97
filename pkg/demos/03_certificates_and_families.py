"""
When is the canonical dual optimal?
===================================

The certificate evaluates the sufficient conditions directly from the
frame.  When they hold with N > n, the canonical dual is one of a whole
segment of optimal duals.
"""

import numpy as np

from frameduals import (
    Frame,
    MeasureSpec,
    WeightSequence,
    certify_canonical,
    max_measure,
    named_example,
    optimize_dual,
    perturbation_family,
    perturbation_radius,
)
from frameduals.optimal import admissible_directions

# three vectors with bounds 1/2 and 1: the conditions are inconclusive,
# but the optimizer confirms the canonical dual reaches 1
F4, q4 = named_example("example_4")
cert = certify_canonical(F4, q4, 0.5)
for name, v in cert.verdicts.items():
    print(f"{name:32s} {v.conclusion:12s} {v.reason}")
print("optimizer:", optimize_dual(F4, q4, 0.5).best_value)

# {e1, e2, e2} with weights (2, 2, 1): index 0 alone attains L, and its span
# meets the span of the others only in 0
F = Frame.from_vectors([[1, 0], [0, 1], [0, 1]])
q = WeightSequence([2, 2, 1], 2)
lam = 0.5
cert = certify_canonical(F, q, lam)
print("L =", cert.L_lambda, "Lambda1 =", cert.Lambda1)
print(cert.verdicts["canonical_optimal_sufficient"].conclusion)

U = admissible_directions(F, q, lam)[0]
delta = perturbation_radius(F, q, lam, U)
print("radius", delta)
for t in np.linspace(-delta, delta, 5):
    G = perturbation_family(F, q, lam, U, t)
    print(f"t = {t:+.3f}  A = {max_measure(F, G, q, MeasureSpec(lam)).value:.12f}")
