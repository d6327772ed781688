"""Validity bounds for the second-order approximation.

Per-term accuracy (< 3.05% relative error) is guaranteed when every exponent
2g x_i'z stays inside (-1/2, 1/2). The Cauchy-Schwarz relaxation replaces the
inner products with the conservative check ||x_M||^2 ||z||^2 < 1/(16 g^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ApproxRbfError
from .models import Dataset, ExactModel
from .sparse import SparseVector


@dataclass(frozen=True)
class BoundReport:
    gamma_max: float
    max_norm_sq_model: float
    max_norm_sq_data: float
    n_violations: int
    n_instances: int

    @property
    def violation_fraction(self) -> float:
        return self.n_violations / self.n_instances if self.n_instances else 0.0


def exponent_bound_holds(x: SparseVector, z: SparseVector, gamma: float) -> bool:
    """Strict per-term exponent check |2g x'z| < 1/2."""
    return abs(2.0 * gamma * x.dot(z)) < 0.5


def cauchy_bound_holds(norm_sq_x: float, norm_sq_z: float, gamma: float) -> bool:
    """Strict conservative check ||x||^2 ||z||^2 < 1/(16 g^2)."""
    return norm_sq_x * norm_sq_z < 1.0 / (16.0 * gamma * gamma)


def gamma_max_for_norms(norm_sq_a: float, norm_sq_b: float) -> float:
    """Largest gamma for which the conservative check passes: 1/(4 |a||b|)."""
    prod = norm_sq_a * norm_sq_b
    if prod <= 0.0:
        return math.inf
    return 1.0 / (4.0 * math.sqrt(prod))


def gamma_max_for_dataset(data: Dataset) -> float:
    """Pre-training bound using the max instance norm for both factors."""
    if not data.instances:
        raise ApproxRbfError("empty dataset")
    max_nsq = data.max_norm_sq()
    return gamma_max_for_norms(max_nsq, max_nsq)


def gamma_max_for_model(model: ExactModel, data_max_norm_sq: float = None) -> float:
    """Bound from the maximal-norm support vector.

    With ``data_max_norm_sq`` omitted, the SV norm stands in for both
    factors, giving the conservative 1/(4 ||x_M||^2).
    """
    model_nsq = model.max_sv_norm_sq()
    if data_max_norm_sq is None:
        data_max_norm_sq = model_nsq
    return gamma_max_for_norms(model_nsq, data_max_norm_sq)


def bound_report(max_sv_norm_sq: float, gamma: float, data: Dataset) -> BoundReport:
    """Count conservative-bound violations of a dataset at the model's gamma."""
    if not data.instances:
        raise ApproxRbfError("empty dataset")
    max_nsq_data = data.max_norm_sq()
    violations = sum(
        0 if cauchy_bound_holds(max_sv_norm_sq, inst.norm_sq(), gamma) else 1
        for inst in data.instances)
    return BoundReport(
        gamma_max=gamma_max_for_norms(max_sv_norm_sq, max_nsq_data),
        max_norm_sq_model=max_sv_norm_sq,
        max_norm_sq_data=max_nsq_data,
        n_violations=violations,
        n_instances=len(data.instances))
