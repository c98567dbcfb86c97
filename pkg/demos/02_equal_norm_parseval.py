"""
Frames that pair optimally with themselves
==========================================

Given strict weights (q_i >= 1, sum 1/q_i = n) we build a Parseval frame
with ||f_i|| = 1/sqrt(q_i).  Paired with itself it reaches the universal
lower bound 1 for every lambda.
"""

import numpy as np

from frameduals import MeasureSpec, WeightSequence, max_measure, pair_optimality, prob_equal_norm_parseval

q = WeightSequence([4, 4 / 3, 2, 4, 2, 4 / 3], 3)
print("1/q =", 1 / q.q, "sum", np.sum(1 / q.q))

rep = prob_equal_norm_parseval(q)
P = rep.frame
print("residuals:", rep.parseval_residual, rep.norm_residual)
print("frame operator:\n", np.round(P.frame_operator().real, 12))
print("sqrt(q) * norms:", np.sqrt(q.q) * P.norms())

for lam in (0, 0.25, 0.5, 0.75, 1):
    v = max_measure(P, P, q, MeasureSpec(lam)).value
    print(f"lam = {lam}: A(P, P) = {v:.12f}, optimal pair: {pair_optimality(P, P, q, lam).optimal}")
