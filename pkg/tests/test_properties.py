"""Property-based checks over randomly generated instances."""

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from frameduals import (
    Frame,
    MeasureSpec,
    WeightSequence,
    apply_unitary,
    dual_space_basis,
    frame_distance,
    is_dual_pair,
    lipschitz_bound,
    max_measure,
    measure_for_set,
    prob_equal_norm_parseval,
    random_dual,
    random_frame,
    random_unitary,
    random_weights,
)

seeds = st.integers(0, 2**32 - 1)
dims = st.tuples(st.integers(1, 5), st.integers(0, 5)).map(lambda t: (t[0], t[0] + t[1]))
lams = st.floats(0, 1)


@settings(max_examples=60, deadline=None)
@given(dims, seeds, lams)
def test_floor_for_strict_weights(nN, seed, lam):
    n, N = nN
    F = random_frame(n, N, seed)
    G = random_dual(F, seed + 1)
    q = random_weights(n, N, seed + 2)
    assert max_measure(F, G, q, MeasureSpec(lam)).value >= 1 - 1e-9


@settings(max_examples=60, deadline=None)
@given(dims, seeds, lams)
def test_closed_form_matches_generic(nN, seed, lam):
    n, N = nN
    F = random_frame(n, N, seed, real=seed % 2 == 0)
    G = random_dual(F, seed + 1, scale=2.0)
    q = WeightSequence.relaxed(np.random.default_rng(seed).uniform(0.1, 5, N))
    i = seed % N
    a = measure_for_set(F, G, q, lam, (i,))
    b = measure_for_set(F, G, q, lam, (i,), exact_rank_one=False)
    assert abs(a - b) <= 1e-8


@settings(max_examples=60, deadline=None)
@given(dims, seeds, lams, st.floats(0, 1))
def test_convex_and_lipschitz(nN, seed, lam, t):
    n, N = nN
    F = random_frame(n, N, seed)
    G1, G2 = random_dual(F, seed + 1), random_dual(F, seed + 2, scale=3.0)
    q = random_weights(n, N, seed + 3)
    A = lambda G: max_measure(F, G, q, MeasureSpec(lam)).value  # noqa: E731
    Gt = Frame(t * G1.synthesis + (1 - t) * G2.synthesis, check=False)
    assert A(Gt) <= t * A(G1) + (1 - t) * A(G2) + 1e-10
    assert abs(A(G1) - A(G2)) <= lipschitz_bound(F, q) * frame_distance(G1, G2) + 1e-12


@settings(max_examples=40, deadline=None)
@given(dims, seeds)
def test_parameterization_complete(nN, seed):
    n, N = nN
    F = random_frame(n, N, seed)
    par = dual_space_basis(F)
    assert par.dimension == n * (N - n)
    G = random_dual(F, seed + 1)
    assert is_dual_pair(F, G)
    assert frame_distance(par.dual(par.coefficients(G)), G) <= 1e-9
    f = np.random.default_rng(seed).standard_normal((n, 100))
    for U in par.basis:
        assert np.max(np.abs(U @ (F.analysis @ f))) <= 1e-10 * max(1, np.abs(f).max())


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6), st.integers(0, 6), seeds)
def test_construction_properties(n, extra, seed):
    q = random_weights(n, n + extra, seed)
    rep = prob_equal_norm_parseval(q)
    assert rep.parseval_residual <= 1e-10 and rep.norm_residual <= 1e-10
    assert np.allclose(np.sqrt(q.q) * rep.frame.norms(), 1, atol=1e-10)


@settings(max_examples=40, deadline=None)
@given(dims, seeds, lams)
def test_unitary_invariance(nN, seed, lam):
    n, N = nN
    F = random_frame(n, N, seed)
    G = random_dual(F, seed + 1)
    q = WeightSequence.relaxed(np.random.default_rng(seed).uniform(0.1, 5, N))
    U = random_unitary(n, seed + 2)
    a = max_measure(F, G, q, MeasureSpec(lam))
    b = max_measure(apply_unitary(U, F), apply_unitary(U, G), q, MeasureSpec(lam))
    assert abs(a.value - b.value) <= 1e-10
