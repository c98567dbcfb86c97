import math

import numpy as np
import pytest

from frameduals import (
    Frame,
    MeasureSpec,
    ProbabilitySequence,
    WeightSequence,
    apply_unitary,
    canonical_dual,
    error_operator,
    lipschitz_bound,
    max_measure,
    measure_for_set,
    named_example,
    probabilities_from_weights,
    random_dual,
    random_frame,
    random_unitary,
    random_weights,
    weights_from_probabilities,
)
from frameduals.construct import example_dual, rng_for
from frameduals.errors import (
    InvalidProbabilities,
    InvalidWeights,
    NotADualPair,
    TooManySubsets,
    ValidationError,
)

R5 = 2 * math.sqrt(5) / 3


@pytest.fixture
def ex5():
    F, q = named_example("example_5")
    return F, canonical_dual(F), q


def test_probability_validation():
    with pytest.raises(InvalidProbabilities, match="probabilities must sum to 1"):
        ProbabilitySequence([0.5, 0.4])
    with pytest.raises(InvalidProbabilities):
        ProbabilitySequence([1.0, 0.0])
    with pytest.raises(InvalidProbabilities):
        ProbabilitySequence([1.2, -0.2])


def test_weights_from_probabilities():
    q = weights_from_probabilities([1 / 3, 1 / 3, 1 / 3], 2)
    assert np.allclose(q.q, 1.5) and q.strict
    q = weights_from_probabilities([0, 0.5, 0.5], 2)
    assert np.allclose(q.q, [1, 2, 2])
    rng = rng_for(1)
    for _ in range(100):
        N = int(rng.integers(2, 12))
        n = int(rng.integers(1, N + 1))
        p = rng.dirichlet(np.ones(N))
        q = weights_from_probabilities(p, n)
        assert abs(np.sum(1 / q.q) - n) <= 1e-10
        if N > n:
            assert np.all(q.q >= 1)
        assert np.allclose(probabilities_from_weights(q).p, p)


def test_weight_modes():
    with pytest.raises(InvalidWeights):
        WeightSequence([0.5, 1, 1], 2)
    with pytest.raises(InvalidWeights):
        WeightSequence([1, 1, 1], 2)
    r = WeightSequence.relaxed([0.5, 1, 1])
    assert not r.strict
    with pytest.raises(InvalidWeights):
        WeightSequence.relaxed([0, 1])


def test_error_operator_examples(ex5):
    F, C, q = ex5
    E = error_operator(F, C, q, [0])
    assert np.allclose(E, [[4 / 3, 0], [-2 / 3, 0]], atol=1e-15)
    assert np.array_equal(error_operator(F, C, q, []), np.zeros((2, 2)))
    P = Frame(np.array([[1, -0.5, -0.5], [0, math.sqrt(3) / 2, -math.sqrt(3) / 2]]) * math.sqrt(2 / 3))
    q3 = WeightSequence([1.5] * 3, 2)
    assert np.allclose(error_operator(P, canonical_dual(P), q3, [0, 1, 2]), 1.5 * np.eye(2))
    with pytest.raises(NotADualPair):
        error_operator(F, F, q, [0])
    with pytest.raises(ValidationError):
        error_operator(F, C, q, [0, 0])
    with pytest.raises(ValidationError):
        error_operator(F, C, q, [3])


def test_measure_for_set_examples(ex5):
    F, C, q = ex5
    assert measure_for_set(F, C, q, 1.0, [0]) == pytest.approx(4 / 3, abs=1e-14)
    assert measure_for_set(F, C, q, 0.0, [0]) == pytest.approx(R5, abs=1e-14)
    for lam in (0, 0.3, 1):
        assert measure_for_set(F, C, q, lam, [2]) == pytest.approx(4 / 5, abs=1e-14)
        assert measure_for_set(F, C, q, lam, [2], exact_rank_one=False) == pytest.approx(4 / 5, abs=1e-12)


def test_max_measure_examples(ex5):
    F, C, q = ex5
    for lam in np.linspace(0, 1, 5):
        r = max_measure(F, C, q, MeasureSpec(lam))
        assert r.value == pytest.approx(4 / 3 * lam + R5 * (1 - lam), abs=1e-12)
        assert r.argmax == (0,)
    G = example_dual(-1 / 6, -1 / 6)
    assert max_measure(F, G, q, MeasureSpec(1.0)).value == pytest.approx(1.2, abs=1e-12)
    assert max_measure(F, G, q, MeasureSpec(0.0)).value == pytest.approx(math.sqrt(2), abs=1e-12)


def test_max_measure_ties_and_debug():
    F = Frame(np.eye(2))
    q = WeightSequence([1, 1], 2)
    r = max_measure(F, F, q, MeasureSpec(0.5), debug=True)
    assert r.value == pytest.approx(1) and r.argmax == (0,)
    r2 = max_measure(F, F, q, MeasureSpec(0.5, 2))
    assert r2.argmax == (0, 1) and r2.value == pytest.approx(1)


def test_max_measure_multi_erasure():
    F = random_frame(3, 6, 3)
    G = random_dual(F, 4)
    q = random_weights(3, 6, 5)
    r = max_measure(F, G, q, MeasureSpec(0.4, 2))
    assert len(r.locations) == 15
    assert r.value == pytest.approx(max(measure_for_set(F, G, q, 0.4, L) for L in r.locations))


def test_subset_cap():
    F = random_frame(2, 40, 1)
    q = WeightSequence.relaxed(np.ones(40))
    with pytest.raises(TooManySubsets):
        max_measure(F, canonical_dual(F), q, MeasureSpec(0.5, 10))


def test_measure_spec_validation():
    with pytest.raises(ValidationError):
        MeasureSpec(1.5)
    with pytest.raises(ValidationError):
        MeasureSpec(0.5, 0)


def test_lipschitz_bound_examples():
    F4, q4 = named_example("example_4")
    assert lipschitz_bound(F4, q4) == pytest.approx(1.0)
    assert lipschitz_bound(Frame(np.eye(3)), np.ones(3)) == 1.0


def test_radius_below_norm_and_ordering():
    rng = rng_for(9)
    for k in range(300):
        n = int(rng.integers(1, 5))
        N = int(rng.integers(n, 9))
        F = random_frame(n, N, [1, k])
        G = random_dual(F, [2, k])
        q = WeightSequence.relaxed(rng.uniform(0.5, 3, N))
        L = tuple(sorted(rng.choice(N, size=int(rng.integers(1, N + 1)), replace=False)))
        E = error_operator(F, G, q, L)
        from frameduals import numerics

        assert numerics.spectral_radius(E) <= numerics.operator_norm(E) + 1e-12
        lam = float(rng.uniform())
        r = max_measure(F, G, q, MeasureSpec(1.0)).value
        o = max_measure(F, G, q, MeasureSpec(0.0)).value
        a = max_measure(F, G, q, MeasureSpec(lam)).value
        assert r <= a + 1e-12 and a <= o + 1e-12


def test_unitary_invariance_including_argmax():
    for k in range(20):
        F = random_frame(3, 6, [3, k])
        G = random_dual(F, [4, k])
        q = random_weights(3, 6, [5, k])
        U = random_unitary(3, [6, k])
        a = max_measure(F, G, q, MeasureSpec(0.3))
        b = max_measure(apply_unitary(U, F), apply_unitary(U, G), q, MeasureSpec(0.3))
        assert abs(a.value - b.value) <= 1e-10 and a.argmax == b.argmax


def test_max_difference_utility():
    rng = rng_for(10)
    for _ in range(1000):
        a, b = rng.standard_normal((2, int(rng.integers(1, 10))))
        assert abs(a.max() - b.max()) <= np.max(np.abs(a - b)) + 1e-15
