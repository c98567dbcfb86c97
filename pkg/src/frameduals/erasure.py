"""Probabilistic erasure model and the error measures built on it.

If the coefficients indexed by ``erased`` are lost, reconstructing with the
dual ``G`` leaves the defect ``E f = sum_{i in erased} q_i <f, f_i> g_i``.
Its size is measured by a convex combination of spectral radius and
operator norm, ``lam * rho(E) + (1 - lam) * ||E||``, and the worst case over
all erasure sets of a given size is reported.
"""

import itertools
from dataclasses import dataclass, field
from math import comb

import numpy as np

from . import numerics
from .errors import InvalidProbabilities, InvalidWeights, TooManySubsets, ValidationError
from .frames import require_dual_pair

MAX_SUBSETS = 100_000
TIE_TOL = 1e-12


class ProbabilitySequence:
    """Erasure probabilities ``p_i`` with ``0 <= p_i < 1`` and ``sum p_i = 1``."""

    __slots__ = ("p",)

    def __init__(self, p, tol=1e-12):
        p = np.array(p, dtype=float).reshape(-1)
        if p.size == 0 or not np.all(np.isfinite(p)):
            raise InvalidProbabilities("probabilities must be finite and non-empty")
        if np.any(p < 0) or np.any(p >= 1):
            raise InvalidProbabilities("probabilities must satisfy 0 <= p_i < 1")
        if abs(p.sum() - 1.0) > tol:
            raise InvalidProbabilities(
                f"probabilities must sum to 1 (sum is {p.sum():.17g})"
            )
        p.setflags(write=False)
        self.p = p

    def __len__(self):
        return self.p.size

    def __repr__(self):
        return f"ProbabilitySequence({self.p.tolist()})"


class WeightSequence:
    """Weight numbers ``q_i`` attached to the frame indices.

    In strict mode the weights satisfy ``q_i >= 1`` and ``sum 1/q_i = n``,
    the conditions under which pairs are compared against the universal
    optimum 1.  Relaxed mode only asks for ``q_i > 0``.
    """

    __slots__ = ("q", "n", "strict")

    def __init__(self, q, n, strict=True, tol=1e-10):
        q = np.array(q, dtype=float).reshape(-1)
        if q.size == 0 or not np.all(np.isfinite(q)):
            raise InvalidWeights("weights must be finite and non-empty")
        if np.any(q <= 0):
            raise InvalidWeights("weights must be positive")
        if strict:
            if np.any(q < 1.0 - tol):
                raise InvalidWeights("strict weights must satisfy q_i >= 1")
            s = float(np.sum(1.0 / q))
            if abs(s - n) > tol * max(1.0, n):
                raise InvalidWeights(f"strict weights need sum 1/q_i = {n}, got {s:.17g}")
        q.setflags(write=False)
        self.q = q
        self.n = int(n)
        self.strict = bool(strict)

    @classmethod
    def relaxed(cls, q, n=None):
        q = np.asarray(q, dtype=float)
        return cls(q, n if n is not None else 0, strict=False)

    @classmethod
    def auto(cls, q, n, tol=1e-10):
        """Strict if the strict conditions hold, relaxed otherwise."""
        try:
            return cls(q, n, strict=True, tol=tol)
        except InvalidWeights:
            return cls(q, n, strict=False)

    def __len__(self):
        return self.q.size

    def __repr__(self):
        mode = "strict" if self.strict else "relaxed"
        return f"WeightSequence({self.q.tolist()}, n={self.n}, {mode})"


def weights_from_probabilities(p, n):
    """``q_i = (N - 1) / (n (1 - p_i))``; then ``sum 1/q_i = n`` identically."""
    if not isinstance(p, ProbabilitySequence):
        p = ProbabilitySequence(p)
    N = len(p)
    if N < 2:
        raise InvalidProbabilities("need at least two coefficients")
    q = (N - 1) / (n * (1.0 - p.p))
    return WeightSequence.auto(q, n)


def probabilities_from_weights(q):
    """Inverse of :func:`weights_from_probabilities`."""
    qq = q.q if isinstance(q, WeightSequence) else np.asarray(q, dtype=float)
    n = q.n if isinstance(q, WeightSequence) else None
    if n is None:
        raise ValueError("dimension needed: pass a WeightSequence")
    return ProbabilitySequence(1.0 - (qq.size - 1) / (n * qq))


def _weights_array(q, N):
    qq = q.q if isinstance(q, WeightSequence) else np.asarray(q, dtype=float)
    if qq.shape != (N,):
        raise ValidationError(f"expected {N} weights, got {qq.size}")
    return qq


def _erasure_set(erased, N):
    idx = tuple(sorted(int(i) for i in erased))
    if len(set(idx)) != len(idx):
        raise ValidationError(f"erasure set {idx} has repeated indices")
    if idx and (idx[0] < 0 or idx[-1] >= N):
        raise ValidationError(f"erasure set {idx} out of range for N = {N}")
    return idx


def error_operator(F, G, q, erased, check=True):
    """``E = sum_{i in erased} q_i g_i f_i^H`` as an ``n x n`` matrix."""
    if check:
        require_dual_pair(F, G)
    qq = _weights_array(q, F.N)
    idx = list(_erasure_set(erased, F.N))
    if not idx:
        return np.zeros((F.n, F.n), dtype=complex)
    return (G.synthesis[:, idx] * qq[idx]) @ F.analysis[idx, :]


def pointwise_terms(F, G, q, lam):
    """``q_i (lam |<f_i, g_i>| + (1 - lam) ||f_i|| ||g_i||)`` for every ``i``.

    These are the exact one-erasure measures: ``q_i g_i f_i^H`` has the
    eigenvalues 0 and ``q_i <f_i, g_i>`` and norm ``q_i ||f_i|| ||g_i||``.
    """
    qq = _weights_array(q, F.N)
    ip = np.abs(np.sum(F.synthesis * G.synthesis.conj(), axis=0))
    nn = np.linalg.norm(F.synthesis, axis=0) * np.linalg.norm(G.synthesis, axis=0)
    return qq * (lam * ip + (1.0 - lam) * nn)


def measure_for_set(F, G, q, lam, erased, exact_rank_one=True, check=True):
    """``lam * rho(E) + (1 - lam) * ||E||`` for one erasure set.

    Singletons use the closed form unless ``exact_rank_one`` is False, in
    which case spectral radius and norm come from the generic eigenvalue
    and singular value routines.
    """
    _check_lambda(lam)
    idx = _erasure_set(erased, F.N)
    if check:
        require_dual_pair(F, G)
    if len(idx) == 1 and exact_rank_one:
        return float(pointwise_terms(F, G, q, lam)[idx[0]])
    E = error_operator(F, G, q, idx, check=False)
    return lam * numerics.spectral_radius(E) + (1.0 - lam) * numerics.operator_norm(E)


@dataclass(frozen=True)
class MeasureSpec:
    lam: float
    m: int = 1

    def __post_init__(self):
        _check_lambda(self.lam)
        if int(self.m) != self.m or self.m < 1:
            raise ValidationError(f"erasure count must be a positive integer, got {self.m}")


@dataclass(frozen=True)
class MeasureReport:
    value: float
    argmax: tuple
    per_location: np.ndarray = field(repr=False)
    locations: tuple = field(repr=False, default=())


def _check_lambda(lam):
    if not (0.0 <= lam <= 1.0):
        raise ValidationError(f"lambda must lie in [0, 1], got {lam}")


def max_measure(F, G, q, spec, debug=False):
    """Worst-case measure over all erasure sets of size ``spec.m``.

    Sets are enumerated in lexicographic order and ties resolve to the
    first maximiser.  ``debug=True`` recomputes the one-erasure fast path
    through the generic route and asserts agreement.
    """
    if not isinstance(spec, MeasureSpec):
        spec = MeasureSpec(*spec) if isinstance(spec, tuple) else MeasureSpec(spec)
    require_dual_pair(F, G)
    N, m, lam = F.N, spec.m, spec.lam
    if m > N:
        raise ValidationError(f"cannot erase {m} of {N} coefficients")
    if comb(N, m) > MAX_SUBSETS:
        raise TooManySubsets(f"C({N}, {m}) = {comb(N, m)} exceeds {MAX_SUBSETS}")
    if m == 1:
        vals = pointwise_terms(F, G, q, lam)
        locs = tuple((i,) for i in range(N))
        if debug:
            for i in range(N):
                slow = measure_for_set(F, G, q, lam, (i,), exact_rank_one=False, check=False)
                if abs(slow - vals[i]) > 1e-8 * max(1.0, abs(slow)):
                    raise AssertionError(f"closed form disagrees at index {i}")
    else:
        locs = tuple(itertools.combinations(range(N), m))
        vals = np.array(
            [measure_for_set(F, G, q, lam, L, check=False) for L in locs], dtype=float
        )
    top = float(np.max(vals))
    # ties within rounding resolve to the lexicographically first set
    k = int(np.flatnonzero(vals >= top - TIE_TOL * max(1.0, abs(top)))[0])
    return MeasureReport(top, locs[k], vals, locs)


def operator_norm_measure(F, G, q):
    """Worst one-erasure operator norm."""
    return max_measure(F, G, q, MeasureSpec(0.0, 1)).value


def spectral_measure(F, G, q):
    """Worst one-erasure spectral radius."""
    return max_measure(F, G, q, MeasureSpec(1.0, 1)).value


def averaged_measure(F, G, q, lam):
    return max_measure(F, G, q, MeasureSpec(lam, 1)).value


def lipschitz_bound(F, q):
    """``max_i q_i ||f_i||``, a Lipschitz constant of ``G -> A(F, G)`` in the 2-norm."""
    qq = _weights_array(q, F.N)
    return float(np.max(qq * F.norms()))
