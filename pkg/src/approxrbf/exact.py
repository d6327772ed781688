"""Exact RBF decision function; the ground truth for all approximations."""

from __future__ import annotations

import math
from typing import List

from . import backend
from .errors import DimensionError
from .models import Dataset, DecisionValue, ExactModel, csr_arrays, label_for
from .sparse import SparseVector


def rbf_kernel(x: SparseVector, z: SparseVector, gamma: float) -> float:
    """e^{-gamma * ||x - z||^2}, via merged sparse traversal."""
    return math.exp(-gamma * x.dist_sq(z))


def _check_dim(max_index: int, dimension: int):
    if max_index > dimension:
        raise DimensionError(
            f"instance index {max_index} exceeds model dimension {dimension}")


def decide_exact(model: ExactModel, z: SparseVector) -> DecisionValue:
    """Sum of coef_i * kernel(x_i, z) plus bias."""
    _check_dim(z.max_index, model.dimension)
    value = decide_exact_values(model, [z])[0]
    return DecisionValue(value, label_for(value, model.labels))


def decide_exact_values(model: ExactModel, instances) -> "list[float]":
    indptr, idx, val = csr_arrays(list(instances))
    sv_indptr, sv_idx, sv_val = model.csr()
    out = backend.core.exact_batch(
        sv_indptr, sv_idx, sv_val, model.sv_norms_sq(), model.coefficients,
        model.gamma, model.bias, indptr, idx, val, model.dimension)
    return [float(x) for x in out]


def decide_exact_batch(model: ExactModel, data: Dataset) -> List[DecisionValue]:
    _check_dim(max((v.max_index for v in data.instances), default=0),
               model.dimension)
    indptr, idx, val = data.csr()
    sv_indptr, sv_idx, sv_val = model.csr()
    out = backend.core.exact_batch(
        sv_indptr, sv_idx, sv_val, model.sv_norms_sq(), model.coefficients,
        model.gamma, model.bias, indptr, idx, val, model.dimension)
    return [DecisionValue(float(v), label_for(float(v), model.labels))
            for v in out]
