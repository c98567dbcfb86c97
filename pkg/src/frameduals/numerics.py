"""Dense small-matrix linear algebra over complex doubles.

Thin, validated wrappers around LAPACK (through :mod:`numpy.linalg`).  Every
routine accepts real or complex array-likes and works in complex double
precision; real inputs are embedded with zero imaginary part.
"""

import numpy as np

from .errors import NoConvergence, NotHermitian, NotPositiveDefinite, ShapeMismatch

#: Default tolerance used for Hermitian checks, rank decisions and the like.
TOL = 1e-10


def as_matrix(M):
    A = np.asarray(M, dtype=complex)
    if A.ndim != 2:
        raise ShapeMismatch(f"expected a 2-d array, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ShapeMismatch("matrix has non-finite entries")
    return A


def _square(A):
    if A.shape[0] != A.shape[1]:
        raise ShapeMismatch(f"expected a square matrix, got shape {A.shape}")


def eig_hermitian(M, tol=TOL):
    """Eigendecomposition of a Hermitian matrix.

    Parameters
    ----------
    M : array_like, shape (n, n)
        Hermitian matrix (real symmetric inputs are fine).
    tol : float
        Largest entrywise deviation ``|M - M^H|`` tolerated.

    Returns
    -------
    w : ndarray, shape (n,)
        Real eigenvalues in ascending order.
    V : ndarray, shape (n, n)
        Orthonormal eigenvectors as columns, ``M @ V = V @ diag(w)``.
    """
    A = as_matrix(M)
    _square(A)
    skew = np.max(np.abs(A - A.conj().T)) if A.size else 0.0
    if skew > tol:
        raise NotHermitian(f"max |M - M^H| = {skew:.3e} exceeds {tol:.1e}")
    A = 0.5 * (A + A.conj().T)
    try:
        w, V = np.linalg.eigh(A)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return w, V


def singular_values(M):
    """Singular values in descending order; the first one is the operator norm."""
    A = as_matrix(M)
    if A.size == 0:
        return np.zeros(0)
    try:
        return np.linalg.svd(A, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc


def eig_general(M):
    """Complex eigenvalues of a general square matrix (with multiplicity)."""
    A = as_matrix(M)
    _square(A)
    try:
        return np.linalg.eigvals(A)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc


def spectral_radius(M):
    ev = eig_general(M)
    return float(np.max(np.abs(ev))) if ev.size else 0.0


def operator_norm(M):
    s = singular_values(M)
    return float(s[0]) if s.size else 0.0


def hermitian_power(M, exponent):
    """``M**exponent`` for Hermitian positive definite ``M``.

    ``exponent`` must be one of -1, -1/2 or 1/2.  The result is
    ``V diag(w**exponent) V^H`` from :func:`eig_hermitian`.
    """
    if exponent not in (-1, -0.5, 0.5):
        raise ValueError(f"exponent must be -1, -1/2 or 1/2, got {exponent!r}")
    w, V = eig_hermitian(M)
    top = float(np.max(np.abs(w))) if w.size else 0.0
    if w.size == 0 or w[0] <= 1e-12 * top or top == 0.0:
        raise NotPositiveDefinite(
            f"smallest eigenvalue {w[0] if w.size else 0.0:.3e} is not positive "
            f"relative to the largest {top:.3e}"
        )
    return (V * w**exponent) @ V.conj().T
