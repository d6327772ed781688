import math

import numpy as np
import pytest

from approxrbf import (Dataset, DimensionError, ExactModel, SparseVector,
                       decide_exact, decide_exact_batch, rbf_kernel)

from conftest import brute_force_decision, random_model, random_sparse


def test_kernel_identical_points():
    x = SparseVector([1, 4], [0.3, -2.0])
    assert rbf_kernel(x, x, 3.7) == 1.0


def test_kernel_unit_distance():
    x = SparseVector([1], [1.0])
    z = SparseVector([], [])
    assert rbf_kernel(x, z, 1.0) == pytest.approx(0.36787944117144233, rel=1e-15)


def test_kernel_hand_computed_distance():
    # squared distance: (1-0)^2 + (2-1)^2 = 2
    x = SparseVector([1, 2], [1.0, 2.0])
    z = SparseVector([2], [1.0])
    assert rbf_kernel(x, z, 0.5) == pytest.approx(math.exp(-1.0), rel=1e-15)


def test_kernel_range_and_symmetry(rng):
    for _ in range(100):
        x = random_sparse(rng, 10)
        z = random_sparse(rng, 10)
        gamma = rng.uniform(0.01, 2.0)
        k = rbf_kernel(x, z, gamma)
        assert 0.0 < k <= 1.0
        assert (k == 1.0) == (x.dist_sq(z) == 0.0)
        assert k == rbf_kernel(z, x, gamma)


def test_expansion_identity(rng):
    # e^{-g||x-z||^2} == e^{-g||x||^2} e^{-g||z||^2} e^{2g x.z}
    for _ in range(200):
        x = random_sparse(rng, 8)
        z = random_sparse(rng, 8)
        gamma = rng.uniform(0.01, 1.0)
        product = (math.exp(-gamma * x.norm_sq())
                   * math.exp(-gamma * z.norm_sq())
                   * math.exp(2.0 * gamma * x.dot(z)))
        assert product == pytest.approx(rbf_kernel(x, z, gamma), rel=1e-12)


def test_decide_single_sv_at_itself():
    x = SparseVector([1, 2], [1.0, -1.0])
    m = ExactModel(0.5, 0.0, [1.0], [x], 2, labels=(1.0, -1.0))
    assert decide_exact(m, x).value == pytest.approx(1.0)


def test_decide_two_identical_svs_with_bias():
    x = SparseVector([1], [2.0])
    m = ExactModel(1.0, 0.2, [0.5, 0.5], [x, x], 1, labels=(1.0, -1.0))
    dv = decide_exact(m, x)
    assert dv.value == pytest.approx(1.2)
    assert dv.label == 1.0


def test_decide_matches_dense_oracle(rng):
    for _ in range(50):
        m = random_model(rng)
        z = random_sparse(rng, m.dimension)
        assert decide_exact(m, z).value == pytest.approx(
            brute_force_decision(m, z), rel=1e-12, abs=1e-12)


def test_decide_permutation_invariant(rng):
    m = random_model(rng, d=5, n_sv=10)
    perm = rng.permutation(10)
    m2 = ExactModel(m.gamma, m.bias, m.coefficients[perm],
                    [m.support_vectors[i] for i in perm], m.dimension,
                    labels=m.labels)
    z = random_sparse(rng, 5)
    assert decide_exact(m, z).value == pytest.approx(
        decide_exact(m2, z).value, rel=1e-13)


def test_tie_goes_to_second_label():
    x = SparseVector([1], [1.0])
    m = ExactModel(1.0, -1.0, [1.0], [x], 1, labels=(7.0, 9.0))
    dv = decide_exact(m, x)   # kernel is exactly 1, value exactly 0
    assert dv.value == 0.0
    assert dv.label == 9.0


def test_dimension_error():
    m = ExactModel(1.0, 0.0, [1.0], [SparseVector([1], [1.0])], 1,
                   labels=(1.0, -1.0))
    with pytest.raises(DimensionError):
        decide_exact(m, SparseVector([2], [1.0]))
    with pytest.raises(DimensionError):
        decide_exact_batch(m, Dataset([1.0], [SparseVector([3], [1.0])]))


def test_batch_matches_single(rng):
    m = random_model(rng, d=6, n_sv=8)
    instances = [random_sparse(rng, 6) for _ in range(20)]
    data = Dataset([1.0] * 20, instances, dimension=6)
    batch = decide_exact_batch(m, data)
    for inst, dv in zip(instances, batch):
        single = decide_exact(m, inst)
        assert dv.value == single.value
        assert dv.label == single.label
