"""Frame constructors: equal-weighted-norm Parseval frames, seeded random
instances, and the two worked examples.

Random draws use numpy's PCG64 generator seeded through
:class:`numpy.random.SeedSequence`, so a given integer seed reproduces the
same instance on every platform numpy supports.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import numerics
from .erasure import WeightSequence
from .errors import InvalidWeights, MajorizationFail, RankFail, UnknownId, ValidationError
from .frames import Frame, canonical_dual, dual_space_basis, frame_operator


def rng_for(seed):
    return np.random.default_rng(np.random.SeedSequence(seed))


@dataclass(frozen=True)
class ConstructionReport:
    frame: Frame
    parseval_residual: float
    norm_residual: float


def majorization_ok(targets, n, tol=1e-12):
    """Partial-sum test that ``targets`` is majorized by ``(1,...,1,0,...,0)``.

    ``targets`` are the desired squared norms ``1/q_i``; sorted in
    descending order, every partial sum of the first ``k <= n`` must stay
    below ``k``, and the total must equal ``n``.
    """
    d = np.sort(np.asarray(targets, dtype=float))[::-1]
    ps = np.cumsum(d)
    k = np.arange(1, d.size + 1)
    head = ps[: min(n, d.size)] <= k[: min(n, d.size)] + tol
    tail = ps <= n + tol
    return bool(np.all(head) and np.all(tail) and abs(ps[-1] - n) <= tol * max(1, n) * 10)


def _givens_chain(d, n):
    """Orthonormal ``N x n`` matrix whose squared row norms are ``d``.

    ``d`` must lie in ``(0, 1]`` and sum to an integer ``n``.  The diagonal
    of the rank-``n`` projection starts as a 0/1 pattern, chosen on the fly,
    and adjacent-plane rotations fix one entry per step: at step ``k`` the
    carried value ``c`` at position ``k`` is rotated against the untouched
    entry ``e`` at ``k+1`` so that ``cos^2 c + sin^2 e = d_k``.  Picking
    ``e = 0`` when ``c >= d_k`` and ``e = 1`` otherwise keeps ``c`` in
    ``[0, 1]``; the choice is forced once the number of ones still needed
    equals the number of slots left (or reaches zero), so exactly ``n``
    ones get used.
    """
    N = d.size
    Q = np.eye(N)
    e = np.zeros(N)
    e[0] = 1.0
    c = 1.0
    for k in range(N - 1):
        need, left = n - int(e.sum()), N - 1 - k
        if need >= left:
            e[k + 1] = 1.0
        elif need <= 0:
            e[k + 1] = 0.0
        else:
            e[k + 1] = 0.0 if c >= d[k] else 1.0
        denom = c - e[k + 1]
        s2 = 0.0 if denom == 0.0 else (c - d[k]) / denom
        s2 = min(max(s2, 0.0), 1.0)
        s, co = np.sqrt(s2), np.sqrt(1.0 - s2)
        rk, rk1 = Q[k].copy(), Q[k + 1].copy()
        Q[k] = co * rk + s * rk1
        Q[k + 1] = -s * rk + co * rk1
        c = c + e[k + 1] - d[k]
    ones = np.flatnonzero(e == 1.0)
    return Q[:, ones]


def prob_equal_norm_parseval(q):
    """Parseval frame with ``||f_i|| = 1/sqrt(q_i)`` for strict weights ``q``.

    The weights are sorted ascending, the frame is built for the sorted
    norms, and the inverse permutation restores the requested order.  The
    construction is real.
    """
    if not isinstance(q, WeightSequence):
        raise ValidationError("expected a WeightSequence")
    if not q.strict:
        raise InvalidWeights("the construction needs strict weights (q_i >= 1, sum 1/q_i = n)")
    n, N = q.n, len(q)
    if N < n:
        raise ValidationError(f"need N >= n, got N = {N}, n = {n}")
    order = np.argsort(q.q, kind="stable")
    d = 1.0 / q.q[order]
    if not majorization_ok(d, n):
        raise MajorizationFail("target norms are not majorized by the identity spectrum")
    d = d * (n / d.sum())
    V = _givens_chain(d, n)
    if V.shape[1] != n:
        raise MajorizationFail(f"rotation chain used {V.shape[1]} unit eigenvalues, expected {n}")
    rows = np.empty_like(V)
    rows[order] = V
    F = Frame(rows.T, check=False)
    par = float(np.max(np.abs(frame_operator(F) - np.eye(n))))
    nrm = float(np.max(np.abs(F.norms() - 1.0 / np.sqrt(q.q))))
    return ConstructionReport(F, par, nrm)


def random_frame(n, N, seed, real=False):
    """Frame of i.i.d. standard normal entries (complex unless ``real``)."""
    if not (N >= n >= 1):
        raise ValidationError(f"need N >= n >= 1, got n = {n}, N = {N}")
    rng = rng_for(seed)
    for _ in range(10):
        if real:
            A = rng.standard_normal((n, N))
        else:
            A = (rng.standard_normal((n, N)) + 1j * rng.standard_normal((n, N))) / np.sqrt(2)
        s = np.linalg.svd(A, compute_uv=False)
        if s[-1] > 1e-8 * s[0]:
            return Frame(A)
    raise RankFail("could not draw a spanning frame in 10 attempts")


def random_dual(F, seed, scale=1.0):
    """Canonical dual plus normal coefficients (std ``scale``) on the dual basis.

    Real frames get real coefficients, so the dual stays real.
    """
    par = dual_space_basis(F)
    if par.dimension == 0 or scale == 0:
        return par.canonical
    rng = rng_for(seed)
    k = par.dimension
    if F.is_real():
        c = rng.standard_normal(k)
    else:
        c = (rng.standard_normal(k) + 1j * rng.standard_normal(k)) / np.sqrt(2)
    return par.dual(scale * c)


def random_weights(n, N, seed):
    """Random strict weights: ``1/q_i = min(1, s u_i)`` with ``u`` uniform and ``s``
    fixed by bisection so that the reciprocals sum to ``n``."""
    if N < n:
        raise ValidationError(f"need N >= n, got N = {N}, n = {n}")
    if N == n:
        return WeightSequence(np.ones(N), n)
    rng = rng_for(seed)
    u = rng.uniform(0.05, 1.0, size=N)
    lo, hi = 0.0, n / u.min()
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if np.minimum(1.0, mid * u).sum() < n:
            lo = mid
        else:
            hi = mid
    d = np.minimum(1.0, hi * u)
    d = d * (n / d.sum())
    d = np.minimum(d, 1.0)
    q = 1.0 / d
    return WeightSequence(q, n)


def random_unitary(n, seed, real=False):
    """Haar-distributed unitary (orthogonal if ``real``) via phase-corrected QR."""
    rng = rng_for(seed)
    if real:
        Z = rng.standard_normal((n, n))
    else:
        Z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    Q, R = np.linalg.qr(Z)
    ph = np.diag(R) / np.abs(np.diag(R))
    return Q * ph


def random_tight_frame(n, N, seed, bound=1.0, real=False):
    """``sqrt(bound) S^{-1/2} F`` for a random frame ``F``."""
    F = random_frame(n, N, seed, real=real)
    S_mh = numerics.hermitian_power(frame_operator(F), -0.5)
    return Frame(np.sqrt(bound) * (S_mh @ F.synthesis))


_EXAMPLES = {
    # three vectors in R^2 with bounds 1/2 and 1; canonical dual is optimal and unique
    "example_4": (
        [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1, 2)], [Fraction(0), Fraction(1, 2)]],
        [Fraction(1), Fraction(2), Fraction(2)],
    ),
    # three vectors in R^2 whose canonical dual is optimal for none of the measures
    "example_5": (
        [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)], [Fraction(1), Fraction(1)]],
        [Fraction(2), Fraction(3, 2), Fraction(6, 5)],
    ),
}

EXAMPLE_IDS = tuple(_EXAMPLES)


def named_example(name):
    """``(Frame, WeightSequence)`` for ``"example_4"`` or ``"example_5"``."""
    try:
        vecs, q = _EXAMPLES[name]
    except KeyError:
        raise UnknownId(f"unknown example {name!r}; known: {', '.join(EXAMPLE_IDS)}") from None
    F = Frame.from_vectors([[float(x) for x in v] for v in vecs])
    return F, WeightSequence([float(x) for x in q], F.n)


def example_dual(alpha, beta):
    """Member of the two-parameter dual family of ``example_5``."""
    F, _ = named_example("example_5")
    C = canonical_dual(F).synthesis.real
    shift = np.array([[alpha, alpha, -alpha], [beta, beta, -beta]])
    return Frame(C + shift, check=False)
