"""Monte-Carlo transmission with one randomly erased coefficient per trial.

Each trial draws an erasure location ``i`` from ``p`` (inverse CDF), a
signal ``f`` and records ``||q_i <f, f_i> g_i|| / ||f||``, the relative
reconstruction error left by the weighted error operator.  Trials run in
fixed-size blocks whose generators are spawned from one
:class:`numpy.random.SeedSequence`, so results do not depend on how the
blocks are scheduled.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .erasure import ProbabilitySequence, WeightSequence, _weights_array, weights_from_probabilities
from .errors import ShapeMismatch, ValidationError, WeightMismatch
from .frames import require_dual_pair

BLOCK = 4096


@dataclass(frozen=True)
class SimConfig:
    trials: int = 10_000
    seed: int = 0
    signal: Optional[np.ndarray] = None  # None: uniform on the unit sphere
    workers: int = 1

    def __post_init__(self):
        if int(self.trials) != self.trials or self.trials < 1:
            raise ValidationError(f"trials must be a positive integer, got {self.trials}")
        if self.workers < 1:
            raise ValidationError("workers must be >= 1")


@dataclass(frozen=True)
class SimReport:
    trials: int
    location_counts: np.ndarray
    mean_error: float
    max_error: float
    per_location_mean: np.ndarray = field(repr=False)

    @property
    def frequencies(self):
        return self.location_counts / self.trials


def _block(F, G, qq, cdf, size, seed_seq, signal, real):
    rng = np.random.default_rng(seed_seq)
    loc = np.searchsorted(cdf, rng.random(size), side="right")
    loc = np.minimum(loc, cdf.size - 1)
    n = F.n
    if signal is None:
        if real:
            f = rng.standard_normal((size, n))
        else:
            f = rng.standard_normal((size, n)) + 1j * rng.standard_normal((size, n))
    else:
        f = np.broadcast_to(signal, (size, n))
    fn = np.linalg.norm(f, axis=1)
    ip = np.abs(np.einsum("tk,kt->t", f, F.synthesis[:, loc].conj()))
    err = qq[loc] * ip * np.linalg.norm(G.synthesis[:, loc], axis=0) / fn
    return loc, err


def run_simulation(F, G, p, q, cfg=None):
    """Simulate ``cfg.trials`` single-erasure transmissions of a dual pair."""
    cfg = cfg or SimConfig()
    require_dual_pair(F, G)
    if not isinstance(p, ProbabilitySequence):
        p = ProbabilitySequence(p)
    if len(p) != F.N:
        raise ShapeMismatch(f"expected {F.N} probabilities, got {len(p)}")
    qq = _weights_array(q, F.N)
    expected = weights_from_probabilities(p, F.n).q
    dev = float(np.max(np.abs(qq - expected)))
    if dev > 1e-9:
        raise WeightMismatch(f"weights differ from (N-1)/(n(1-p_i)) by {dev:.3e}")
    signal = None
    if cfg.signal is not None:
        signal = np.asarray(cfg.signal, dtype=complex).reshape(-1)
        if signal.size != F.n or not np.any(signal):
            raise ValidationError(f"signal must be a nonzero vector of length {F.n}")
    real = F.is_real() and G.is_real()
    cdf = np.cumsum(p.p)
    cdf[-1] = 1.0
    sizes = [BLOCK] * (cfg.trials // BLOCK)
    if cfg.trials % BLOCK:
        sizes.append(cfg.trials % BLOCK)
    seeds = np.random.SeedSequence(cfg.seed).spawn(len(sizes))
    jobs = [(F, G, qq, cdf, s, ss, signal, real) for s, ss in zip(sizes, seeds)]
    if cfg.workers > 1:
        with ThreadPoolExecutor(cfg.workers) as pool:
            parts = list(pool.map(lambda a: _block(*a), jobs))
    else:
        parts = [_block(*a) for a in jobs]
    loc = np.concatenate([a for a, _ in parts])
    err = np.concatenate([b for _, b in parts])
    counts = np.bincount(loc, minlength=F.N)
    per_loc = np.array(
        [math.fsum(err[loc == i]) / counts[i] if counts[i] else 0.0 for i in range(F.N)]
    )
    return SimReport(
        cfg.trials, counts, math.fsum(err) / cfg.trials, float(err.max()), per_loc
    )
