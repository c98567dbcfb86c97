import numpy as np
import pytest

from frameduals import (
    DualPair,
    Frame,
    apply_unitary,
    canonical_dual,
    dual_space_basis,
    frame_bounds,
    frame_operator,
    is_dual_pair,
    named_example,
    random_dual,
    random_frame,
    random_unitary,
    solve_inner_products,
)
from frameduals.construct import example_dual, rng_for
from frameduals.errors import DependentInput, NotADualPair, NotAFrame, NotUnitary, ShapeMismatch


def test_frame_operator_examples():
    F, _ = named_example("example_5")
    assert np.array_equal(frame_operator(F), [[2, 1], [1, 2]])
    F = random_frame(3, 7, 1)
    S = sum(np.outer(v, v.conj()) for v in F.vectors)
    assert np.max(np.abs(frame_operator(F) - S)) <= 1e-12


def test_frame_bounds():
    F4, _ = named_example("example_4")
    b = frame_bounds(F4)
    assert (b.lower, b.upper) == pytest.approx((0.5, 1.0), abs=1e-14)
    assert not b.tight
    b = frame_bounds(Frame(np.eye(2)))
    assert b.tight and b.parseval
    F5, _ = named_example("example_5")
    assert (frame_bounds(F5).lower, frame_bounds(F5).upper) == pytest.approx((1, 3))


def test_frame_rejects_non_spanning():
    with pytest.raises(NotAFrame):
        Frame([[1, 1, 1], [0, 0, 0]])
    with pytest.raises(NotAFrame):
        Frame(np.ones((3, 2)))


def test_frame_is_immutable():
    F = Frame(np.eye(2))
    with pytest.raises(ValueError):
        F.synthesis[0, 0] = 5


def test_canonical_dual_examples():
    F5, _ = named_example("example_5")
    want = np.array([[2, -1], [-1, 2], [1, 1]]) / 3
    assert np.allclose(canonical_dual(F5).vectors, want, atol=1e-15)
    F4, _ = named_example("example_4")
    assert np.allclose(canonical_dual(F4).vectors, [[1, 0], [0, 1], [0, 1]], atol=1e-15)
    P = Frame(np.array([[1, -0.5, -0.5], [0, np.sqrt(3) / 2, -np.sqrt(3) / 2]]) * np.sqrt(2 / 3))
    assert np.max(np.abs(canonical_dual(P).synthesis - P.synthesis)) <= 1e-10


def test_is_dual_pair_examples():
    F5, _ = named_example("example_5")
    assert is_dual_pair(F5, canonical_dual(F5))
    assert is_dual_pair(F5, example_dual(-1 / 6, -1 / 6))
    # {(1,0),(0,1),(0,0)} is the member alpha = beta = 1/3 of the dual family
    E = Frame.from_vectors([[1, 0], [0, 1], [0, 0]], check=False)
    assert is_dual_pair(F5, E)
    assert np.allclose(example_dual(1 / 3, 1 / 3).synthesis, E.synthesis)
    assert not is_dual_pair(F5, Frame.from_vectors([[1, 0], [0, 1], [1, 0]], check=False))
    with pytest.raises(ShapeMismatch):
        is_dual_pair(F5, Frame(np.eye(2)))
    with pytest.raises(NotADualPair):
        DualPair(F5, F5)


def test_reconstruction_both_ways():
    rng = rng_for(3)
    for k in range(10):
        F = random_frame(3, 6, [1, k])
        G = random_dual(F, [2, k])
        for _ in range(100):
            f = rng.standard_normal(3) + 1j * rng.standard_normal(3)
            a = F.synthesis @ (G.analysis @ f)
            b = G.synthesis @ (F.analysis @ f)
            assert np.linalg.norm(a - f) <= 1e-9 * np.linalg.norm(f)
            assert np.linalg.norm(b - f) <= 1e-9 * np.linalg.norm(f)


def test_dual_space_basis_properties():
    F = random_frame(3, 7, 11)
    par = dual_space_basis(F)
    assert par.dimension == 3 * 4
    B = np.array([U.reshape(-1) for U in par.basis])
    assert np.allclose(B.conj() @ B.T, np.eye(par.dimension), atol=1e-12)
    for U in par.basis:
        assert np.max(np.abs(U @ F.analysis)) <= 1e-10
    G = random_dual(F, 5)
    assert is_dual_pair(F, G)
    back = par.dual(par.coefficients(G))
    assert np.max(np.abs(back.synthesis - G.synthesis)) <= 1e-9


def test_dual_space_basis_examples():
    assert dual_space_basis(random_frame(3, 3, 7)).dimension == 0
    F4, _ = named_example("example_4")
    par = dual_space_basis(F4)
    assert par.dimension == 2
    for U in par.basis:
        # u = {0, (a, b), (-a, -b)}
        assert np.allclose(U[:, 0], 0) and np.allclose(U[:, 1], -U[:, 2])
    F5, _ = named_example("example_5")
    for U in dual_space_basis(F5).basis:
        assert np.allclose(U[:, 0], U[:, 1]) and np.allclose(U[:, 2], -U[:, 0])


def test_apply_unitary():
    F4, _ = named_example("example_4")
    R = np.array([[0, -1], [1, 0]])
    assert np.allclose(apply_unitary(R, F4).vectors, [[0, 1], [-0.5, 0], [-0.5, 0]])
    assert apply_unitary(np.eye(2), F4) == F4
    with pytest.raises(NotUnitary):
        apply_unitary(2 * np.eye(2), F4)
    F = random_frame(3, 5, 2)
    U = random_unitary(3, 4)
    a, b = frame_bounds(F), frame_bounds(apply_unitary(U, F))
    assert abs(a.lower - b.lower) <= 1e-10 and abs(a.upper - b.upper) <= 1e-10


def test_solve_inner_products():
    h = solve_inner_products([[1, 0, 0], [0, 1, 0]], 1)
    assert np.allclose(h, [1, 1, 0])
    h = solve_inner_products([[1, 0], [1, 1]], -1)
    assert np.allclose(h, [-1, 0])
    assert np.allclose(solve_inner_products([[1, 2j]], 0), 0)
    V = np.array([[1, 1j, 0], [0, 2, 1 - 1j]])
    h = solve_inner_products(V, 2 - 3j)
    assert np.allclose(V @ h.conj(), 2 - 3j)  # <f_i, h> = h^H f_i
    with pytest.raises(DependentInput):
        solve_inner_products([[1, 0], [2, 0]], 1)
