import math

import numpy as np
import pytest

from approxrbf import (ApproxRbfError, Dataset, DimensionError, ExactModel,
                       SparseVector, build_approx, decide_approx,
                       decide_approx_batch, decide_exact, maclaurin_exp,
                       maclaurin_relative_error)

from conftest import random_model, random_sparse, summation_form


@pytest.mark.parametrize("t,expected", [(0.0, 1.0), (0.5, 1.625), (-0.5, 0.625)])
def test_maclaurin_exp(t, expected):
    assert maclaurin_exp(t) == expected


def test_maclaurin_relative_error_bound_endpoints():
    # exact values of |(e^x - (1+x+x^2/2))/e^x|
    assert maclaurin_relative_error(0.0) == 0.0
    assert maclaurin_relative_error(-0.5) == pytest.approx(0.03045079418758009, abs=1e-12)
    assert maclaurin_relative_error(0.5) == pytest.approx(0.014387677966970715, abs=1e-12)


def test_build_single_sv_at_origin():
    m = ExactModel(0.3, 0.0, [2.5], [SparseVector([], [])], 3,
                   labels=(1.0, -1.0))
    am = build_approx(m)
    assert am.c == 2.5
    assert np.all(am.v == 0.0)
    assert np.all(am.matrix == 0.0)
    assert am.max_sv_norm_sq == 0.0


def test_build_single_sv_derived():
    # c = e^{-0.1}, v = [0.2 e^{-0.1}], M = [[0.02 e^{-0.1}]]
    m = ExactModel(0.1, 0.0, [1.0], [SparseVector([1], [1.0])], 1,
                   labels=(1.0, -1.0))
    am = build_approx(m)
    e = math.exp(-0.1)
    assert am.c == pytest.approx(e, rel=1e-15)
    assert am.v[0] == pytest.approx(0.2 * e, rel=1e-15)
    assert am.matrix[0, 0] == pytest.approx(0.02 * e, rel=1e-15)
    assert am.max_sv_norm_sq == 1.0


def test_build_two_svs_cancellation():
    m = ExactModel(0.1, 0.0, [1.0, 1.0],
                   [SparseVector([1], [1.0]), SparseVector([1], [-1.0])], 1,
                   labels=(1.0, -1.0))
    am = build_approx(m)
    e = math.exp(-0.1)
    assert am.c == pytest.approx(2.0 * e, rel=1e-15)
    assert am.v[0] == pytest.approx(0.0, abs=1e-16)
    assert am.matrix[0, 0] == pytest.approx(0.04 * e, rel=1e-15)


def test_build_rejects_poly2_model():
    from approxrbf import Poly2Params
    m = ExactModel(1.0, 0.0, [1.0], [SparseVector([1], [1.0])], 1,
                   labels=(1.0, -1.0), kernel="poly2",
                   poly_params=Poly2Params(1.0, 1.0))
    with pytest.raises(ApproxRbfError):
        build_approx(m)


def test_decide_at_origin_is_c_plus_b(rng):
    m = random_model(rng)
    am = build_approx(m)
    dv = decide_approx(am, SparseVector([], []))
    assert dv.value == pytest.approx(am.c + am.bias, rel=1e-14)


def test_decide_exact_when_all_inner_products_zero():
    # SV at origin: every x_i'z is 0, so the series is exact
    m = ExactModel(0.7, 0.3, [1.4], [SparseVector([], [])], 2,
                   labels=(1.0, -1.0))
    am = build_approx(m)
    z = SparseVector([1, 2], [0.5, -1.5])
    assert decide_approx(am, z).value == pytest.approx(
        decide_exact(m, z).value, rel=1e-14)


def test_decide_derived_d1():
    m = ExactModel(0.1, 0.0, [1.0], [SparseVector([1], [1.0])], 1,
                   labels=(1.0, -1.0))
    am = build_approx(m)
    z = SparseVector([1], [1.0])
    expected = 1.22 * math.exp(-0.2)
    got = decide_approx(am, z).value
    assert got == pytest.approx(expected, rel=1e-13)
    # approximation error against the exact value 1.0 stays tiny here
    assert abs(decide_exact(m, z).value - got) == pytest.approx(
        abs(1.0 - expected), abs=1e-13)


def test_structural_equivalence(rng):
    # the c/v/M algebra must reproduce the defining summation form
    for _ in range(100):
        m = random_model(rng)
        am = build_approx(m)
        z = random_sparse(rng, m.dimension)
        got = decide_approx(am, z).value
        want = summation_form(m, z)
        assert abs(got - want) <= 1e-10 * max(1.0, abs(want))


def test_gradient_hessian_finite_differences(rng):
    m = random_model(rng, d=4, n_sv=6, density=1.0)
    am = build_approx(m)
    g = m.gamma
    d = m.dimension

    def gfun(z_dense):
        total = 0.0
        for coef, x in zip(m.coefficients, m.support_vectors):
            xd = x.to_dense(d)
            total += (coef * np.exp(-g * (xd @ xd))
                      * np.exp(2.0 * g * (xd @ z_dense)))
        return total

    h = 1e-5
    for j in range(d):
        ej = np.zeros(d)
        ej[j] = h
        grad_fd = (gfun(ej) - gfun(-ej)) / (2 * h)
        assert grad_fd == pytest.approx(am.v[j], rel=1e-5, abs=1e-9)
    # second differences need a larger step to beat cancellation noise
    h = 1e-3
    for j in range(d):
        ej = np.zeros(d)
        ej[j] = h
        for k in range(d):
            ek = np.zeros(d)
            ek[k] = h
            hess_fd = (gfun(ej + ek) - gfun(ej - ek)
                       - gfun(-ej + ek) + gfun(-ej - ek)) / (4 * h * h)
            # z'Mz double-counts M_jk, so M holds half the Hessian
            assert hess_fd == pytest.approx(2.0 * am.matrix[j, k],
                                            rel=1e-4, abs=1e-8)


def test_per_term_error_bound(rng):
    # |2g x'z| <= 0.5 keeps each term within 3.05% of the exact exponential
    for _ in range(200):
        x = random_sparse(rng, 6)
        z = random_sparse(rng, 6)
        dot = x.dot(z)
        if dot == 0.0:
            continue
        gamma = rng.uniform(0.0, 0.25) / abs(dot)   # |2 g x'z| <= 0.5
        exponent = 2.0 * gamma * dot
        rel = abs(math.exp(exponent) - maclaurin_exp(exponent)) / math.exp(exponent)
        assert rel < 0.0305


def test_batch_matches_single_and_bound_flags(rng):
    m = random_model(rng, d=5, n_sv=10)
    am = build_approx(m)
    instances = [random_sparse(rng, 5) for _ in range(30)]
    data = Dataset([1.0] * 30, instances, dimension=5)
    batch = decide_approx_batch(am, data, check_bound=True)
    limit = 1.0 / (16.0 * am.gamma ** 2)
    for inst, (dv, ok) in zip(instances, batch):
        assert dv.value == decide_approx(am, inst).value
        assert ok == (am.max_sv_norm_sq * inst.norm_sq() < limit)


def test_bound_flag_boundary_cases():
    # max_sv_norm_sq = 1, gamma = 0.25 -> limit is exactly 1
    m = ExactModel(0.25, 0.0, [1.0], [SparseVector([1], [1.0])], 2,
                   labels=(1.0, -1.0))
    am = build_approx(m)
    inside = SparseVector([1, 2], [0.3, 0.9])     # ||z||^2 = 0.9
    on_edge = SparseVector([1], [1.0])            # ||z||^2 = 1.0
    data = Dataset([1.0, 1.0], [inside, on_edge], dimension=2)
    flags = [ok for _, ok in decide_approx_batch(am, data, check_bound=True)]
    assert flags == [True, False]


def test_dimension_error(rng):
    am = build_approx(random_model(rng, d=2, n_sv=3))
    with pytest.raises(DimensionError):
        decide_approx(am, SparseVector([5], [1.0]))


def test_all_zero_coefficients_constant_prediction(rng):
    svs = [random_sparse(rng, 4) for _ in range(5)]
    m = ExactModel(0.1, 0.42, [0.0] * 5, svs, 4, labels=(1.0, -1.0))
    am = build_approx(m)
    assert am.c == 0.0
    assert np.all(am.v == 0.0)
    assert np.all(am.matrix == 0.0)
    z = random_sparse(rng, 4)
    assert decide_approx(am, z).value == pytest.approx(0.42)
