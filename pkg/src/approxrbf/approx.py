"""Build and evaluate the compact quadratic-form approximation.

The decision function e^{-g||z||^2} * (c + v'z + z'Mz) + b replaces the sum
over support vectors; prediction cost is O(nnz(z)^2), independent of n_SV.
"""

from __future__ import annotations

from typing import List, Tuple

import numpy as np

from . import backend
from .bounds import cauchy_bound_holds
from .errors import ApproxRbfError, DimensionError
from .models import (ApproxModel, Dataset, DecisionValue, ExactModel,
                     csr_arrays, label_for)
from .sparse import SparseVector


def maclaurin_exp(t: float) -> float:
    """Second-order series for e^t: 1 + t + t^2/2."""
    return 1.0 + t + 0.5 * t * t


def maclaurin_relative_error(t: float) -> float:
    """|(e^t - (1 + t + t^2/2)) / e^t|; stays below 0.0305 for |t| < 1/2."""
    et = np.exp(t)
    return abs((et - maclaurin_exp(t)) / et)


def build_approx(model: ExactModel) -> ApproxModel:
    """Collapse the support-vector sum into scalars c, vector v, matrix M.

    c = sum_i a_i, v = sum_i 2g a_i x_i, M = sum_i 2g^2 a_i x_i x_i', with
    a_i = coef_i e^{-g ||x_i||^2}.
    """
    if model.kernel != "rbf":
        raise ApproxRbfError("build_approx requires an RBF model")
    sv_indptr, sv_idx, sv_val = model.csr()
    c, v, M, max_nsq = backend.core.build_cvm(
        sv_indptr, sv_idx, sv_val, model.coefficients, model.gamma,
        model.dimension)
    # only the upper triangle is authoritative; mirror it so M is exactly
    # symmetric regardless of accumulation rounding order
    M = np.triu(M) + np.triu(M, 1).T
    return ApproxModel(gamma=model.gamma, bias=model.bias, c=c, v=v, matrix=M,
                       max_sv_norm_sq=max_nsq, dimension=model.dimension,
                       model_kind=model.model_kind, labels=model.labels)


def _check_dim(max_index: int, dimension: int):
    if max_index > dimension:
        raise DimensionError(
            f"instance index {max_index} exceeds model dimension {dimension}")


def decide_approx(model: ApproxModel, z: SparseVector) -> DecisionValue:
    _check_dim(z.max_index, model.dimension)
    indptr, idx, val = csr_arrays([z])
    out, _ = backend.core.approx_batch(
        model.c, model.v, model.matrix, model.gamma, model.bias,
        indptr, idx, val)
    value = float(out[0])
    return DecisionValue(value, label_for(value, model.labels))


def decide_approx_batch(model: ApproxModel, data: Dataset,
                        check_bound: bool = False
                        ) -> List[Tuple[DecisionValue, bool]]:
    """Batch prediction; the squared instance norm computed for the scaling
    factor is reused for the zero-cost validity check."""
    _check_dim(max((v.max_index for v in data.instances), default=0),
               model.dimension)
    indptr, idx, val = data.csr()
    values, norms = backend.core.approx_batch(
        model.c, model.v, model.matrix, model.gamma, model.bias,
        indptr, idx, val)
    results = []
    for value, nsq in zip(values, norms):
        value = float(value)
        ok = True
        if check_bound:
            ok = cauchy_bound_holds(model.max_sv_norm_sq, float(nsq), model.gamma)
        results.append(
            (DecisionValue(value, label_for(value, model.labels)), ok))
    return results
