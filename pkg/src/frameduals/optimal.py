"""Optimal one-erasure duals of a fixed frame, and optimality certificates.

For a frame ``F`` and weights ``q`` the objective over duals ``G`` is

    A(F, G) = max_i q_i (lam |<f_i, g_i>| + (1 - lam) ||f_i|| ||g_i||),

a maximum of convex functions of ``G`` on the affine space of duals.
:func:`optimize_dual` minimises it; the certificate functions evaluate the
sufficient and necessary conditions under which the canonical dual is
optimal (or the only optimum) without running any search.
"""

from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np
from scipy.optimize import minimize

from . import numerics
from .erasure import WeightSequence, _weights_array, pointwise_terms
from .errors import (
    HypothesesFail,
    NotADualPair,
    PrerequisiteNotMet,
    ShapeMismatch,
    ValidationError,
    WrongWeightMode,
)
from .frames import Frame, canonical_dual, dual_space_basis, frame_bounds, is_dual_pair
from .numerics import TOL

#: Two optimal values closer than this are treated as equal.
OPTIMALITY_TOL = 1e-6
#: Index sets {i : value_i = max} use this relative slack.
ACTIVE_TOL = 1e-10


@dataclass(frozen=True)
class OptimizationConfig:
    """Settings for :func:`optimize_dual`.

    ``max_iterations`` subgradient steps are taken first (step
    ``step_scale / sqrt(k)`` or a fixed ``step_scale``; the default scale is
    the reciprocal Lipschitz bound).  If ``polish`` is set the best point is
    then refined by SLSQP on the epigraph form, with function tolerance
    ``tolerance**1.5``.  ``initial`` is ``"canonical"``, ``"random"``
    (coefficients drawn from ``seed``) or an array of coefficients in the
    basis of :func:`frameduals.frames.dual_space_basis`.
    """

    max_iterations: int = 200
    step_rule: str = "diminishing"
    step_scale: Optional[float] = None
    initial: Union[str, np.ndarray] = "canonical"
    seed: int = 0
    tolerance: float = 1e-10
    polish: bool = True
    polish_iterations: int = 500

    def __post_init__(self):
        if self.max_iterations < 0 or self.polish_iterations < 0:
            raise ValidationError("iteration counts must be non-negative")
        if self.max_iterations < 1 and not self.polish:
            raise ValidationError("max_iterations must be >= 1 when polishing is off")
        if self.tolerance <= 0:
            raise ValidationError("tolerance must be positive")
        if self.step_rule not in ("diminishing", "fixed"):
            raise ValidationError(f"unknown step rule {self.step_rule!r}")


@dataclass(frozen=True)
class OptimizationResult:
    best_dual: Frame
    best_value: float
    value_trace: np.ndarray = field(repr=False)
    canonical_value: float
    improved_over_canonical: bool
    coefficients: np.ndarray = field(repr=False)
    converged: bool = False
    iterations: int = 0


class _Problem:
    """The objective in real coordinates on a unitarily normalised frame.

    ``F = V T`` with ``V`` unitary and ``T = diag(s) R`` where ``R`` has
    orthonormal, phase-normalised rows.  ``T`` depends only on the Gram
    matrix of ``F``, so ``F`` and ``U F`` lead to the same coordinates and
    the same iterates.  Duals of ``T`` are ``C + Y W^H`` with ``C`` the
    canonical dual and ``W`` an orthonormal basis of the null space of ``T``.
    """

    def __init__(self, F, q, lam):
        self.frame = F
        self.q = _weights_array(q, F.N)
        self.lam = float(lam)
        n, N = F.shape
        Us, s, Vh = np.linalg.svd(F.synthesis, full_matrices=False)
        for k in range(n):
            row = Vh[k]
            mag = np.abs(row)
            j = int(np.flatnonzero(mag >= mag.max() * (1 - 1e-8))[0])
            ph = row[j] / mag[j]
            Vh[k] = row / ph
            Us[:, k] = Us[:, k] * ph
        scale = float(np.max(np.abs(Vh)))
        self.real = bool(np.max(np.abs(Vh.imag)) <= 1e-12 * scale)
        if self.real:
            Vh = Vh.real
        self.V = Us
        self.T = s[:, None] * Vh
        self.C = Vh / s[:, None]
        k = N - n
        if k:
            Q, _ = np.linalg.qr(Vh.conj().T, mode="complete")
            W = Q[:, n:]
        else:
            W = np.zeros((N, 0), dtype=Vh.dtype)
        self.W = W
        mats = []
        for a in range(n):
            for b in range(k):
                E = np.zeros((n, N), dtype=complex)
                E[a] = W[:, b].conj()
                mats.append(E)
        if not self.real:
            mats = mats + [1j * E for E in mats]
        self.B = np.array(mats, dtype=complex).reshape(len(mats), n, N)
        self.dim = len(mats)
        self.fnorm = np.linalg.norm(self.T, axis=0)
        # d <f_i, g_i> / d x_j
        self.A = np.einsum("ki,jki->ij", self.T, self.B.conj()) if self.dim else np.zeros((N, 0))
        self.Tc = self.T.conj()

    def dual(self, x):
        if self.dim == 0:
            return self.C.astype(complex)
        return self.C + np.tensordot(x, self.B, axes=1)

    def pieces(self, x):
        g = self.dual(x)
        z = np.sum(self.T * g.conj(), axis=0)
        gn = np.linalg.norm(g, axis=0)
        vals = self.q * (self.lam * np.abs(z) + (1 - self.lam) * self.fnorm * gn)
        return vals, g, z, gn

    def value(self, x):
        return float(np.max(self.pieces(x)[0]))

    def gradients(self, x):
        """Values and gradients (rows) of every piece at ``x``."""
        vals, g, z, gn = self.pieces(x)
        az = np.abs(z)
        with np.errstate(invalid="ignore", divide="ignore"):
            w1 = np.where(az > 0, z.conj() / az, 0.0)
            w2 = np.where(gn > 0, 1.0 / gn, 0.0)
        d_abs = np.real(w1[:, None] * self.A)
        d_norm = np.real(np.einsum("ki,jki->ij", g.conj(), self.B)) * w2[:, None]
        grads = self.q[:, None] * (
            self.lam * d_abs + (1 - self.lam) * self.fnorm[:, None] * d_norm
        )
        return vals, grads

    def to_frame(self, x):
        return Frame(self.V @ self.dual(x), check=False)

    def coords_of(self, G):
        GT = self.V.conj().T @ G.synthesis
        Y = (GT - self.C) @ self.W
        if self.real:
            return np.real(Y).reshape(-1)
        Y = Y.reshape(-1)
        return np.concatenate([Y.real, Y.imag])


def _active(vals, tol=1e-12):
    top = float(np.max(vals))
    return int(np.flatnonzero(vals >= top - tol * max(1.0, abs(top)))[0])


def _subgradient(prob, x0, cfg, lip):
    x = x0.copy()
    best_x, best = x.copy(), prob.value(x)
    trace = []
    c = cfg.step_scale if cfg.step_scale is not None else 1.0 / max(lip, 1e-300)
    for k in range(1, cfg.max_iterations + 1):
        vals, grads = prob.gradients(x)
        s = grads[_active(vals)]
        if not np.any(s):
            trace.append(best)
            break
        step = c / np.sqrt(k) if cfg.step_rule == "diminishing" else c
        x = x - step * s
        v = prob.value(x)
        if v < best:
            best, best_x = v, x.copy()
        trace.append(best)
    return best_x, best, trace


def _polish(prob, x0, f0, cfg):
    """SLSQP on the epigraph ``min t  s.t.  phi_i(x) <= t``.

    The pieces are smooth away from ``<f_i, g_i> = 0`` and ``g_i = 0``, so a
    quasi-Newton SQP method converges fast where plain subgradient steps
    crawl.  A run that stops on a failed line search is restarted once
    from its own output.  Returns ``(x, value, trace, converged)``.
    """
    d, N = prob.dim, prob.frame.N
    e = np.zeros(d + 1)
    e[-1] = 1.0
    cons = {
        "type": "ineq",
        "fun": lambda y: y[-1] - prob.pieces(y[:-1])[0],
        "jac": lambda y: np.hstack([-prob.gradients(y[:-1])[1], np.ones((N, 1))]),
    }
    x, fbest, trace, converged = x0.copy(), f0, [], False
    for _ in range(2):
        res = minimize(
            lambda y: y[-1], np.append(x, fbest), jac=lambda y: e, constraints=[cons],
            method="SLSQP", options={"maxiter": cfg.polish_iterations, "ftol": cfg.tolerance**1.5},
        )
        xn = res.x[:d]
        fx = prob.value(xn)
        if fx < fbest:
            x, fbest = xn, fx
        trace.append(fbest)
        if res.status == 0:
            converged = True
            break
    return x, fbest, trace, converged


def _initial_coords(prob, F, cfg):
    init = cfg.initial
    if isinstance(init, str):
        if init == "canonical":
            return np.zeros(prob.dim)
        if init == "random":
            rng = np.random.default_rng(np.random.SeedSequence(cfg.seed))
            span = float(np.max(np.linalg.norm(prob.C, axis=0)))
            return span * rng.standard_normal(prob.dim)
        raise ValidationError(f"unknown initial point {init!r}")
    par = dual_space_basis(F)
    G0 = par.dual(np.asarray(init))
    return prob.coords_of(G0)


def optimize_dual(F, q, lam, cfg=None):
    """Search the dual space of ``F`` for a minimiser of the one-erasure measure.

    Returns an :class:`OptimizationResult`; ``best_value`` is never worse
    than the canonical dual's value, and identical inputs always give
    bit-identical results.
    """
    if not 0.0 <= lam <= 1.0:
        raise ValidationError(f"lambda must lie in [0, 1], got {lam}")
    cfg = cfg or OptimizationConfig()
    S_dual = canonical_dual(F)
    can_val = float(np.max(pointwise_terms(F, S_dual, q, lam)))
    if F.N == F.n:
        return OptimizationResult(
            S_dual, can_val, np.array([can_val]), can_val, False,
            np.zeros(0, dtype=complex), True, 0,
        )
    prob = _Problem(F, q, lam)
    lip = float(np.max(prob.q * prob.fnorm))
    x0 = _initial_coords(prob, F, cfg)
    zero = np.zeros(prob.dim)
    f_can_T = prob.value(zero)
    bx, bv, trace = _subgradient(prob, x0, cfg, lip) if cfg.max_iterations else (x0, prob.value(x0), [])
    if f_can_T <= bv:
        bx, bv = zero, f_can_T
    converged = False
    if cfg.polish:
        bx, bv, t2, converged = _polish(prob, bx, bv, cfg)
        trace += t2
    trace = np.minimum.accumulate(np.array(trace if trace else [bv]))
    if not np.any(bx):
        G = S_dual
    else:
        G = prob.to_frame(bx)
    value = float(np.max(pointwise_terms(F, G, q, lam)))
    if value > can_val:
        G, value = S_dual, can_val
    coeffs = dual_space_basis(F).coefficients(G)
    return OptimizationResult(
        G, value, trace, can_val, value < can_val - OPTIMALITY_TOL, coeffs,
        converged, int(trace.size),
    )


def canonical_is_optimal(result):
    return result.best_value >= result.canonical_value - OPTIMALITY_TOL


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class Verdict:
    applies: bool
    conclusion: str
    reason: str = ""


@dataclass(frozen=True)
class OptimalityCertificate:
    lam: float
    L_lambda: float
    Lambda1: tuple
    Lambda2: tuple
    H1_cap_H2_trivial: bool
    Lambda1_independent: bool
    M: float
    Gamma1: tuple
    Gamma2: tuple
    E1_cap_E2_trivial: bool
    Gamma2_independent: bool
    tight: bool
    equal_weighted_norms: Optional[float]
    nonzero_vectors: bool
    verdicts: dict

    def canonical_optimal(self):
        """True/False when some theorem decides it, None when inconclusive."""
        for key in ("basis", "canonical_optimal_sufficient", "unique_if_tight_equal_norms",
                    "canonical_optimal_if_E_trivial", "uniqueness_iff"):
            v = self.verdicts[key]
            if v.applies and v.conclusion != "not unique":
                return True
        return None

    def unique(self):
        for key in ("basis", "unique_if_tight_equal_norms", "uniqueness_iff",
                    "canonical_optimal_sufficient"):
            v = self.verdicts[key]
            if v.applies:
                if "unique" in v.conclusion and "not unique" not in v.conclusion:
                    return True
                if v.conclusion in ("not unique", "canonical optimal; uncountably many optima"):
                    return False
        return None


def numerical_rank(vectors, tol=TOL):
    """Rank of a set of column vectors, relative threshold on the Gram spectrum."""
    V = np.asarray(vectors, dtype=complex)
    if V.size == 0 or V.shape[1] == 0:
        return 0
    w = np.linalg.eigvalsh(V.conj().T @ V)
    if w[-1] <= 0:
        return 0
    return int(np.sum(w > tol * w[-1]))


def spans_intersect_trivially(A, B, tol=TOL):
    """``span(A) ∩ span(B) = {0}`` via ``rank(A ∪ B) = rank(A) + rank(B)``."""
    AB = np.concatenate([A, B], axis=1)
    return numerical_rank(AB, tol) == numerical_rank(A, tol) + numerical_rank(B, tol)


def is_independent(vectors, tol=TOL):
    V = np.asarray(vectors)
    if V.shape[1] == 0:
        return True
    if np.any(np.linalg.norm(V, axis=0) == 0):
        return False
    return numerical_rank(V, tol) == V.shape[1]


def _argmax_set(vals):
    top = float(np.max(vals))
    return tuple(int(i) for i in np.flatnonzero(vals >= top - ACTIVE_TOL * max(1.0, abs(top))))


def canonical_terms(F, q, lam):
    """``q_i (lam ||S^{-1/2} f_i||^2 + (1 - lam) ||f_i|| ||S^{-1} f_i||)``."""
    qq = _weights_array(q, F.N)
    S = F.frame_operator()
    Smh = numerics.hermitian_power(S, -0.5)
    Smi = numerics.hermitian_power(S, -1)
    a = np.linalg.norm(Smh @ F.synthesis, axis=0) ** 2
    b = F.norms() * np.linalg.norm(Smi @ F.synthesis, axis=0)
    return qq * (lam * a + (1 - lam) * b)


def certify_canonical(F, q, lam):
    """Evaluate every canonical-optimality theorem on ``(F, q, lam)``."""
    if not 0.0 <= lam <= 1.0:
        raise ValidationError(f"lambda must lie in [0, 1], got {lam}")
    qq = _weights_array(q, F.N)
    N, n = F.N, F.n
    syn = F.synthesis
    terms = canonical_terms(F, q, lam)
    L = float(np.max(terms))
    Lam1 = _argmax_set(terms)
    Lam2 = tuple(i for i in range(N) if i not in Lam1)
    H_triv = spans_intersect_trivially(syn[:, Lam1], syn[:, Lam2])
    L1_ind = is_independent(syn[:, Lam1])

    wn = qq * F.norms() ** 2
    M = float(np.max(wn))
    Gam1 = _argmax_set(wn)
    Gam2 = tuple(i for i in range(N) if i not in Gam1)
    E_triv = spans_intersect_trivially(syn[:, Gam1], syn[:, Gam2])
    G2_ind = is_independent(syn[:, Gam2])

    tight = frame_bounds(F).tight
    spread = float(np.max(wn) - np.min(wn))
    equal_c = float(np.mean(wn)) if spread <= TOL * max(1.0, M) else None
    nonzero = bool(np.all(F.norms() > 0))
    exists = nonzero  # the optimal set is nonempty and compact when every f_i != 0

    v = {}
    if N == n:
        v["basis"] = Verdict(True, "unique canonical", "a basis has exactly one dual")
    else:
        v["basis"] = Verdict(False, "inconclusive", "N > n")

    if H_triv and L1_ind:
        concl = "canonical optimal; unique" if N == n else "canonical optimal; uncountably many optima"
        v["canonical_optimal_sufficient"] = Verdict(True, concl)
    else:
        why = []
        if not H_triv:
            why.append("H1 and H2 intersect nontrivially")
        if not L1_ind:
            why.append("{f_i : i in Lambda1} is linearly dependent")
        v["canonical_optimal_sufficient"] = Verdict(False, "inconclusive", "; ".join(why))

    if tight and lam < 1 and equal_c is not None:
        v["unique_if_tight_equal_norms"] = Verdict(True, "unique canonical")
    else:
        why = [w for w, bad in (("not tight", not tight), ("lambda = 1", lam >= 1),
                                ("q_i ||f_i||^2 not constant", equal_c is None)) if bad]
        v["unique_if_tight_equal_norms"] = Verdict(False, "inconclusive", "; ".join(why))

    if tight and E_triv and exists:
        v["canonical_optimal_if_E_trivial"] = Verdict(True, "canonical optimal")
    else:
        why = [w for w, bad in (("not tight", not tight),
                                ("E1 and E2 intersect nontrivially", not E_triv),
                                ("nonempty optimal set not established (zero frame vector)",
                                 not exists)) if bad]
        v["canonical_optimal_if_E_trivial"] = Verdict(False, "inconclusive", "; ".join(why))

    if tight and lam < 1 and exists and M > 0:
        if E_triv and G2_ind:
            v["uniqueness_iff"] = Verdict(True, "unique canonical")
        else:
            why = [w for w, bad in (("E1 and E2 intersect nontrivially", not E_triv),
                                    ("{f_i : i in Gamma2} is linearly dependent", not G2_ind)) if bad]
            v["uniqueness_iff"] = Verdict(True, "not unique", "; ".join(why))
    else:
        why = [w for w, bad in (("not tight", not tight), ("lambda = 1", lam >= 1),
                                ("nonempty optimal set not established", not exists),
                                ("M = 0", M <= 0)) if bad]
        v["uniqueness_iff"] = Verdict(False, "inconclusive", "; ".join(why))

    return OptimalityCertificate(
        float(lam), L, Lam1, Lam2, H_triv, L1_ind, M, Gam1, Gam2, E_triv, G2_ind,
        tight, equal_c, nonzero, v,
    )


def disagreements(cert, result):
    """Conflicts between a certificate and an optimizer run on the same instance."""
    out = []
    opt = canonical_is_optimal(result)
    if cert.canonical_optimal() is True and not opt:
        out.append("certificate says canonical is optimal but the optimizer improved on it")
    return out


# ---------------------------------------------------------------------------
# dual pairs


@dataclass(frozen=True)
class PairVerdict:
    optimal: bool
    witness: Optional[int] = None


def pair_optimality(F, G, q, lam, tol=1e-9):
    """Decide whether ``(F, G)`` attains the universal optimum 1.

    Optimal pairs are exactly those with ``<f_i, g_i> = ||f_i|| ||g_i|| =
    1/q_i`` (only the norm condition when ``lam = 0``, only the inner
    product when ``lam = 1``).  ``witness`` is the first failing index.
    """
    if not isinstance(q, WeightSequence) or not q.strict:
        raise WrongWeightMode("pair optimality needs strict weights (q_i >= 1, sum 1/q = n)")
    if not 0.0 <= lam <= 1.0:
        raise ValidationError(f"lambda must lie in [0, 1], got {lam}")
    if not is_dual_pair(F, G):
        raise NotADualPair("G is not a dual of F")
    target = 1.0 / q.q
    ip = np.sum(F.synthesis * G.synthesis.conj(), axis=0)
    nn = F.norms() * G.norms()
    ok_ip = np.abs(ip - target) <= tol
    ok_nn = np.abs(nn - target) <= tol
    if lam == 0:
        ok = ok_nn
    elif lam == 1:
        ok = ok_ip
    else:
        ok = ok_ip & ok_nn
    bad = np.flatnonzero(~ok)
    return PairVerdict(True) if bad.size == 0 else PairVerdict(False, int(bad[0]))


def is_uniform(F, G, q, tol=1e-9):
    """``q_i <f_i, g_i> = 1`` for every index."""
    ip = np.sum(F.synthesis * G.synthesis.conj(), axis=0)
    return bool(np.all(np.abs(_weights_array(q, F.N) * ip - 1) <= tol))


# ---------------------------------------------------------------------------
# non-uniqueness family


def admissible_directions(F, q, lam):
    """Orthonormal basis of dual perturbations vanishing on ``Lambda1``."""
    cert = certify_canonical(F, q, lam)
    idx = list(cert.Lambda2)
    if not idx:
        return []
    F2 = F.synthesis[:, idx]
    _, s, Vh = np.linalg.svd(F2)
    rank = int(np.sum(s > TOL * (s[0] if s.size else 1.0)))
    null = Vh[rank:].conj().T
    out = []
    for a in range(F.n):
        for b in range(null.shape[1]):
            U = np.zeros(F.shape, dtype=complex)
            U[a, idx] = null[:, b].conj()
            out.append(U)
    return out


def _check_direction(F, cert, U):
    U = np.asarray(U, dtype=complex)
    if U.shape != F.shape:
        raise ShapeMismatch(f"direction must be {F.shape}, got {U.shape}")
    scale = max(float(np.max(np.abs(U))), 1e-300)
    if np.max(np.abs(U @ F.analysis)) > 1e-9 * max(1.0, scale * float(np.max(F.norms()))):
        raise HypothesesFail("direction does not preserve duality (U Theta_F != 0)")
    if cert.Lambda1 and np.max(np.abs(U[:, list(cert.Lambda1)])) > 1e-12 * scale:
        raise HypothesesFail("direction must vanish on Lambda1")
    if not cert.Lambda2 or np.max(np.abs(U[:, list(cert.Lambda2)])) == 0:
        raise HypothesesFail("direction must be nonzero on some index of Lambda2")
    return U


def _require_family_hypotheses(F, cert):
    if not (cert.H1_cap_H2_trivial and cert.Lambda1_independent):
        raise HypothesesFail(cert.verdicts["canonical_optimal_sufficient"].reason)
    if F.N <= F.n:
        raise HypothesesFail("N = n: the canonical dual is the only dual")


def perturbation_radius(F, q, lam, direction, iterations=60):
    """Largest ``delta`` with every ``Lambda2`` term below ``L`` on ``[-delta, delta]``.

    Bisection on ``[0, 2 / ||direction||]``; if the whole bracket qualifies
    its right end is returned.
    """
    cert = certify_canonical(F, q, lam)
    _require_family_hypotheses(F, cert)
    U = _check_direction(F, cert, direction)
    C = canonical_dual(F).synthesis
    L = cert.L_lambda
    idx = list(cert.Lambda2)

    def worst(t):
        vals = []
        for sgn in (1.0, -1.0):
            G = Frame(C + sgn * t * U, check=False)
            vals.append(np.max(pointwise_terms(F, G, q, lam)[idx]))
        return max(vals)

    lo, hi = 0.0, 2.0 / float(np.linalg.norm(U))
    if worst(hi) < L:
        return hi
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        if worst(mid) < L:
            lo = mid
        else:
            hi = mid
    return lo


def perturbation_family(F, q, lam, direction, t):
    """The dual ``S^{-1} f_i + t u_i``; optimal whenever ``|t| <= perturbation_radius``."""
    cert = certify_canonical(F, q, lam)
    _require_family_hypotheses(F, cert)
    U = _check_direction(F, cert, direction)
    return Frame(canonical_dual(F).synthesis + t * U, check=False)


# ---------------------------------------------------------------------------
# relations between the three measures


@dataclass(frozen=True)
class CrossMeasureReport:
    operator_norm: bool
    spectral: bool
    averaged: bool
    lam: float
    in_scope: bool
    values: dict = field(default_factory=dict)

    def agree(self):
        return self.operator_norm == self.spectral == self.averaged


def cross_measure_report(F, q, lam, cfg=None):
    """Is the canonical dual optimal under the norm, radius and averaged measures?

    Each flag comes from an :func:`optimize_dual` run.  For tight frames and
    ``lam < 1`` the three must coincide; otherwise ``in_scope`` is False.
    """
    flags, values = {}, {}
    for key, l in (("operator_norm", 0.0), ("spectral", 1.0), ("averaged", float(lam))):
        res = optimize_dual(F, q, l, cfg)
        flags[key] = canonical_is_optimal(res)
        values[key] = (res.canonical_value, res.best_value)
    in_scope = frame_bounds(F).tight and lam < 1
    return CrossMeasureReport(flags["operator_norm"], flags["spectral"], flags["averaged"],
                              float(lam), in_scope, values)


def s_half_transfer_check(F, q, lam, cfg=None):
    """If the canonical dual minimises the spectral measure, confirm that the
    Parseval frame ``S^{-1/2} F`` is an optimal dual of itself for ``lam``."""
    first = optimize_dual(F, q, 1.0, cfg)
    if not canonical_is_optimal(first):
        raise PrerequisiteNotMet(
            f"canonical dual is not spectrally optimal ({first.best_value:.6g} < "
            f"{first.canonical_value:.6g})"
        )
    P = Frame(numerics.hermitian_power(F.frame_operator(), -0.5) @ F.synthesis, check=False)
    second = optimize_dual(P, q, lam, cfg)
    return canonical_is_optimal(second)
