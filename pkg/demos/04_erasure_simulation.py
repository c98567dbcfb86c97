"""
Simulating erasures
===================

Monte-Carlo transmission with one erased coefficient per trial, drawn
from the erasure probabilities.  The worst relative error seen never
exceeds the analytic operator-norm measure.
"""

import numpy as np

from frameduals import MeasureSpec, SimConfig, canonical_dual, max_measure, named_example, optimize_dual, run_simulation
from frameduals.erasure import probabilities_from_weights

F, q = named_example("example_5")
p = probabilities_from_weights(q)
print("erasure probabilities:", p.p)

for label, G in [("canonical", canonical_dual(F)), ("norm-optimal", optimize_dual(F, q, 0.0).best_dual)]:
    rep = run_simulation(F, G, p, q, SimConfig(trials=100_000, seed=1))
    bound = max_measure(F, G, q, MeasureSpec(0.0)).value
    print(label)
    print("  frequencies     ", np.round(rep.frequencies, 4))
    print("  mean error      ", round(rep.mean_error, 6))
    print("  max error/bound ", round(rep.max_error, 6), "/", round(bound, 6))
