"""Shared generators and independent brute-force oracles.

The oracles here deliberately work on dense numpy arrays and never touch
the package's sparse kernels, so they stay independent of the code paths
they verify.
"""

import numpy as np
import pytest

from approxrbf import ExactModel, SparseVector


def random_sparse(rng, d, density=0.5, scale=1.0):
    mask = rng.random(d) < density
    dense = np.where(mask, rng.normal(0.0, scale, d), 0.0)
    return SparseVector.from_dense(dense)


def random_model(rng, d=None, n_sv=None, gamma=None, density=0.7, scale=1.0,
                 bias=None):
    d = d or int(rng.integers(1, 20))
    n_sv = n_sv or int(rng.integers(1, 30))
    svs = [random_sparse(rng, d, density, scale) for _ in range(n_sv)]
    if gamma is None:
        max_nsq = max((v.norm_sq() for v in svs), default=0.0)
        # keep exponents inside the validity region by default
        gamma = rng.uniform(0.01, 1.0) * (0.25 / max_nsq if max_nsq > 0 else 1.0)
    if bias is None:
        bias = float(rng.normal(0.0, 0.5))
    coefs = rng.normal(0.0, 1.0, n_sv)
    return ExactModel(gamma=gamma, bias=bias, coefficients=coefs,
                      support_vectors=svs, dimension=d,
                      labels=(1.0, -1.0))


def dense_rbf(x_dense, z_dense, gamma):
    diff = np.asarray(x_dense, dtype=float) - np.asarray(z_dense, dtype=float)
    return float(np.exp(-gamma * diff @ diff))


def brute_force_decision(model, z):
    """Dense evaluation of the exact decision sum."""
    d = model.dimension
    zd = z.to_dense(d)
    total = model.bias
    for coef, x in zip(model.coefficients, model.support_vectors):
        total += coef * dense_rbf(x.to_dense(d), zd, model.gamma)
    return total


def summation_form(model, z):
    """Term-by-term second-order form, the defining sum behind (c, v, M)."""
    d = model.dimension
    zd = z.to_dense(d)
    g = model.gamma
    znorm = float(zd @ zd)
    total = model.bias
    for coef, x in zip(model.coefficients, model.support_vectors):
        xd = x.to_dense(d)
        t = float(xd @ zd)
        total += (coef * np.exp(-g * (xd @ xd)) * np.exp(-g * znorm)
                  * (1.0 + 2.0 * g * t + 2.0 * g * g * t * t))
    return total


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
