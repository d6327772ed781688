"""Degree-2 polynomial kernel expansion, the exact counterpart of the RBF
approximation.

Expanding (g x'z + beta)^2 over the support-vector sum gives the same
quadratic shape c + v'z + z'Mz + b, without an exponential prefactor and
without any approximation error.
"""

from __future__ import annotations

import math
from typing import List

import numpy as np

from . import backend
from .errors import ApproxRbfError, DimensionError
from .models import (ApproxModel, Dataset, DecisionValue, ExactModel,
                     Poly2Params, csr_arrays, label_for)
from .sparse import SparseVector


def poly2_kernel(x: SparseVector, z: SparseVector, p: Poly2Params) -> float:
    return (p.gamma * x.dot(z) + p.beta) ** 2


class Poly2Expansion:
    """Exact quadratic form of a degree-2 polynomial model."""

    def __init__(self, c, v, matrix, bias, dimension, model_kind, labels):
        self.c = float(c)
        self.v = np.ascontiguousarray(v, dtype=np.float64)
        self.matrix = np.ascontiguousarray(matrix, dtype=np.float64)
        self.bias = float(bias)
        self.dimension = int(dimension)
        self.model_kind = model_kind
        self.labels = labels

    def decide(self, z: SparseVector) -> DecisionValue:
        return self.decide_batch([z])[0]

    def decide_batch(self, instances) -> List[DecisionValue]:
        instances = list(instances)
        if max((v.max_index for v in instances), default=0) > self.dimension:
            raise DimensionError("instance index exceeds model dimension")
        indptr, idx, val = csr_arrays(instances)
        out = backend.core.quad_batch(
            self.c, self.v, self.matrix, self.bias, indptr, idx, val)
        return [DecisionValue(float(x), label_for(float(x), self.labels))
                for x in out]


def expand_poly2(model: ExactModel, p: Poly2Params = None) -> Poly2Expansion:
    """Expand a degree-2 polynomial model into its exact quadratic form:

    c = beta^2 sum_i coef_i, v = sum_i 2 beta g coef_i x_i,
    M = sum_i g^2 coef_i x_i x_i'.
    """
    if p is None:
        p = model.poly_params
    if model.kernel != "poly2" or p is None:
        raise ApproxRbfError("expand_poly2 requires a degree-2 polynomial model")
    g, beta = p.gamma, p.beta
    d = model.dimension
    c = beta * beta * float(np.sum(model.coefficients))
    v = np.zeros(d, dtype=np.float64)
    M = np.zeros((d, d), dtype=np.float64)
    for coef, x in zip(model.coefficients, model.support_vectors):
        xi = x.indices - 1
        xv = x.values
        v[xi] += (2.0 * beta * g * coef) * xv
        M[np.ix_(xi, xi)] += (g * g * coef) * np.outer(xv, xv)
    return Poly2Expansion(c, v, M, model.bias, d, model.model_kind, model.labels)


def scaling_factor(model: ApproxModel, z: SparseVector) -> float:
    """Per-instance prefactor e^{-g ||z||^2} of the approximated RBF model.

    Under the validity bound with ||z|| <= ||x_M|| this lies in
    (e^{-1/4}, 1].
    """
    return math.exp(-model.gamma * z.norm_sq())
