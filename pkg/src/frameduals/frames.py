"""Finite frames, their operators, and the affine space of dual frames.

A frame is stored by its synthesis matrix: an ``n x N`` complex array whose
``i``-th column is the frame vector ``f_i``.  Inner products are linear in
the first argument, ``<f, g> = g^H f``, so the analysis matrix is the
conjugate transpose of the synthesis matrix.
"""

from dataclasses import dataclass

import numpy as np

from . import numerics
from .errors import DependentInput, NotADualPair, NotAFrame, NotUnitary, ShapeMismatch
from .numerics import TOL


class Frame:
    """An ordered, spanning sequence of ``N`` vectors in ``C^n``.

    Parameters
    ----------
    synthesis : array_like, shape (n, N)
        Column ``i`` is the frame vector ``f_i``.
    check : bool
        Verify the spanning property (``rank = n``).  Duals built from a
        valid frame are always spanning, so internal callers skip it.
    """

    __slots__ = ("_syn",)

    def __init__(self, synthesis, check=True):
        syn = np.array(synthesis, dtype=complex)
        if syn.ndim != 2 or syn.shape[0] < 1:
            raise ShapeMismatch(f"synthesis matrix must be n x N, got shape {syn.shape}")
        if not np.all(np.isfinite(syn)):
            raise NotAFrame("frame vectors must have finite entries")
        n, N = syn.shape
        if N < n:
            raise NotAFrame(f"{N} vectors cannot span a {n}-dimensional space")
        syn.setflags(write=False)
        self._syn = syn
        if check:
            w = np.linalg.eigvalsh(self.frame_operator())
            if w[-1] <= 0 or w[0] <= TOL * w[-1]:
                raise NotAFrame(
                    f"vectors do not span C^{n}: frame operator eigenvalues "
                    f"[{w[0]:.3e}, {w[-1]:.3e}]"
                )

    @classmethod
    def from_vectors(cls, vectors, check=True):
        """Build a frame from a sequence of ``N`` vectors of length ``n``."""
        V = np.array(vectors, dtype=complex)
        if V.ndim != 2:
            raise ShapeMismatch("expected a sequence of equal-length vectors")
        return cls(V.T, check=check)

    @property
    def synthesis(self):
        return self._syn

    @property
    def analysis(self):
        return self._syn.conj().T

    @property
    def vectors(self):
        """Frame vectors as the rows of an ``N x n`` array."""
        return self._syn.T

    @property
    def n(self):
        return self._syn.shape[0]

    @property
    def N(self):
        return self._syn.shape[1]

    @property
    def shape(self):
        return self._syn.shape

    def __len__(self):
        return self.N

    def __getitem__(self, i):
        return self._syn[:, i]

    def norms(self):
        return np.linalg.norm(self._syn, axis=0)

    def is_real(self, tol=0.0):
        return bool(np.max(np.abs(self._syn.imag), initial=0.0) <= tol)

    def frame_operator(self):
        return self._syn @ self._syn.conj().T

    def __eq__(self, other):
        return isinstance(other, Frame) and np.array_equal(self._syn, other._syn)

    def __hash__(self):
        return hash(self._syn.tobytes())

    def __repr__(self):
        return f"Frame(n={self.n}, N={self.N})"


def frame_distance(G1, G2):
    """2-norm on ``H^N``: square root of the summed squared vector distances."""
    return float(np.linalg.norm(G1.synthesis - G2.synthesis))


@dataclass(frozen=True)
class FrameBounds:
    lower: float
    upper: float
    tight: bool
    parseval: bool


def frame_operator(F):
    """``S_F = sum_i f_i f_i^H`` as an ``n x n`` Hermitian matrix."""
    return F.frame_operator()


def frame_bounds(F):
    """Optimal frame bounds, the extreme eigenvalues of the frame operator."""
    w, _ = numerics.eig_hermitian(frame_operator(F))
    lo, hi = float(w[0]), float(w[-1])
    if hi <= 0 or lo <= 1e-12 * hi:
        raise NotAFrame(f"frame operator is singular (eigenvalues {lo:.3e}, {hi:.3e})")
    tight = hi - lo <= TOL * hi
    return FrameBounds(lo, hi, tight, tight and abs(lo - 1.0) <= TOL and abs(hi - 1.0) <= TOL)


def canonical_dual(F):
    """``S^{-1} F``, with one refinement step on the dual equation.

    Inverting ``S`` loses ``cond(S) = cond(F)^2`` digits; with ``R = F C^H - I``
    the update ``C - R^H C`` leaves a residual of order ``R^2``.
    """
    S_inv = numerics.hermitian_power(frame_operator(F), -1)
    C = S_inv @ F.synthesis
    R = F.synthesis @ C.conj().T - np.eye(F.n)
    C = C - R.conj().T @ C
    return Frame(C, check=False)


def _check_shapes(F, G):
    if F.shape != G.shape:
        raise ShapeMismatch(f"frames have shapes {F.shape} and {G.shape}")


def dual_defect(F, G):
    """``max |Theta_F^* Theta_G - I|`` (zero exactly when G is a dual of F)."""
    _check_shapes(F, G)
    R = F.synthesis @ G.analysis - np.eye(F.n)
    return float(np.max(np.abs(R)))


def is_dual_pair(F, G, tol=1e-9):
    """True if ``f = sum_i <f, g_i> f_i`` for every ``f`` (within ``tol``)."""
    return dual_defect(F, G) <= tol


def require_dual_pair(F, G, tol=1e-9):
    d = dual_defect(F, G)
    if d > tol:
        raise NotADualPair(f"reconstruction defect {d:.3e} exceeds {tol:.1e}")


@dataclass(frozen=True)
class DualPair:
    frame: Frame
    dual: Frame

    def __post_init__(self):
        require_dual_pair(self.frame, self.dual)


def null_space_basis(F):
    """Orthonormal basis (columns, ``N x (N-n)``) of ``{c : sum_i c_i f_i = 0}``.

    Computed from the Hermitian eigendecomposition of the Gram matrix
    ``Theta_F Theta_F^*``; eigenvectors for eigenvalues below
    ``TOL * largest`` span the complement of the analysis range.
    """
    gram = F.analysis @ F.synthesis
    w, V = numerics.eig_hermitian(gram)
    k = F.N - F.n
    small = w <= TOL * w[-1]
    if int(small.sum()) != k:
        raise NotAFrame(
            f"Gram matrix has {int(small.sum())} null directions, expected {k}"
        )
    return V[:, :k]


@dataclass(frozen=True)
class DualParameterization:
    """Every dual of a frame is ``canonical + sum_k c_k basis[k]``.

    ``basis[k]`` are ``n x N`` matrices (column ``i`` is the perturbation of
    ``g_i``) that are Frobenius-orthonormal and satisfy ``U Theta_F = 0``.
    Basis element ``k = a * (N - n) + b`` is ``e_a w_b^H`` where ``w_b`` is
    the ``b``-th null-space vector of the synthesis matrix.
    """

    canonical: Frame
    basis: tuple

    @property
    def dimension(self):
        return len(self.basis)

    def dual(self, coefficients):
        c = np.asarray(coefficients, dtype=complex).reshape(-1)
        if c.size != self.dimension:
            raise ShapeMismatch(f"expected {self.dimension} coefficients, got {c.size}")
        syn = self.canonical.synthesis.copy()
        for ck, U in zip(c, self.basis):
            syn = syn + ck * U
        return Frame(syn, check=False)

    def coefficients(self, G):
        """Coordinates of ``G - canonical`` in the basis (Frobenius projection)."""
        D = G.synthesis - self.canonical.synthesis
        return np.array([np.vdot(U, D) for U in self.basis], dtype=complex)


def dual_space_basis(F):
    W = null_space_basis(F)
    n = F.n
    basis = []
    for a in range(n):
        e = np.zeros(n, dtype=complex)
        e[a] = 1.0
        for b in range(W.shape[1]):
            U = np.outer(e, W[:, b].conj())
            U.setflags(write=False)
            basis.append(U)
    return DualParameterization(canonical_dual(F), tuple(basis))


def apply_unitary(U, F, tol=TOL):
    """The frame ``{U f_i}``."""
    U = numerics.as_matrix(U)
    if U.shape != (F.n, F.n):
        raise ShapeMismatch(f"unitary must be {F.n} x {F.n}, got {U.shape}")
    dev = np.max(np.abs(U.conj().T @ U - np.eye(F.n)))
    if dev > tol:
        raise NotUnitary(f"max |U^H U - I| = {dev:.3e}")
    return Frame(U @ F.synthesis, check=False)


def solve_inner_products(vectors, alpha, tol=TOL):
    """Minimum-norm ``h`` with ``<f_i, h> = alpha`` for every given ``f_i``.

    The vectors must be linearly independent; that is what guarantees a
    solution for every scalar ``alpha``.
    """
    V = np.atleast_2d(np.array(vectors, dtype=complex))
    m = V.shape[0]
    if m > V.shape[1]:
        raise DependentInput(f"{m} vectors in dimension {V.shape[1]} are dependent")
    s = np.linalg.svd(V, compute_uv=False)
    if m == 0:
        return np.zeros(V.shape[1], dtype=complex)
    if s[-1] <= tol * max(s[0], 1.0) or s[0] == 0.0:
        raise DependentInput("input vectors are numerically linearly dependent")
    # <f_i, h> = alpha  <=>  conj(f_i) . h = conj(alpha)
    rhs = np.full(m, np.conj(alpha), dtype=complex)
    return np.linalg.pinv(V.conj()) @ rhs
