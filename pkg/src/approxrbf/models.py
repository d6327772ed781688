"""Core model and dataset types."""

from __future__ import annotations

from typing import NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .errors import ApproxRbfError
from .sparse import SparseVector

KIND_CLASSIFIER = "binary-classifier"
KIND_REGRESSOR = "regressor"


class DecisionValue(NamedTuple):
    value: float
    label: Optional[float]


class Poly2Params(NamedTuple):
    """Parameters of the degree-2 polynomial kernel (g*x'z + beta)^2."""
    gamma: float
    beta: float


def label_for(value: float, labels) -> Optional[float]:
    """First label iff value > 0; ties (exactly 0) go to the second label."""
    if labels is None:
        return None
    return labels[0] if value > 0 else labels[1]


def csr_arrays(vectors: Sequence[SparseVector]):
    """Concatenate sparse vectors into CSR buffers with 0-based indices."""
    indptr = np.zeros(len(vectors) + 1, dtype=np.int64)
    for i, v in enumerate(vectors):
        indptr[i + 1] = indptr[i] + v.nnz
    idx = np.empty(indptr[-1], dtype=np.int64)
    val = np.empty(indptr[-1], dtype=np.float64)
    for i, v in enumerate(vectors):
        idx[indptr[i]:indptr[i + 1]] = v.indices - 1
        val[indptr[i]:indptr[i + 1]] = v.values
    return indptr, idx, val


class ExactModel:
    """RBF-kernel SVM model: support vectors with combined coefficients.

    ``kernel`` is "rbf" for the supported prediction path; degree-2
    polynomial models carry kernel "poly2" plus (gamma, coef0) in
    ``poly_params`` and are only consumed by the poly2 module.
    """

    def __init__(self, gamma, bias, coefficients, support_vectors, dimension,
                 model_kind=KIND_CLASSIFIER, labels=None, kernel="rbf",
                 poly_params=None):
        coefficients = np.asarray(coefficients, dtype=np.float64)
        support_vectors = tuple(support_vectors)
        if len(support_vectors) != coefficients.size or not support_vectors:
            raise ApproxRbfError("need equal, nonzero numbers of coefficients and SVs")
        if kernel == "rbf" and not gamma > 0:
            raise ApproxRbfError("gamma must be positive")
        max_idx = max(v.max_index for v in support_vectors)
        if dimension is None:
            dimension = max(max_idx, 1)
        elif max_idx > dimension:
            raise ApproxRbfError("support vector index exceeds dimension")
        if model_kind == KIND_CLASSIFIER:
            if labels is None or len(labels) != 2:
                raise ApproxRbfError("classifier needs exactly two labels")
            labels = tuple(labels)
        else:
            labels = None
        self.gamma = float(gamma)
        self.bias = float(bias)
        self.coefficients = coefficients
        self.support_vectors = support_vectors
        self.dimension = int(dimension)
        self.model_kind = model_kind
        self.labels = labels
        self.kernel = kernel
        self.poly_params = poly_params
        self._csr = None
        self._norms = None

    @property
    def n_sv(self) -> int:
        return len(self.support_vectors)

    def csr(self):
        if self._csr is None:
            self._csr = csr_arrays(self.support_vectors)
        return self._csr

    def sv_norms_sq(self) -> np.ndarray:
        if self._norms is None:
            self._norms = np.array(
                [v.norm_sq() for v in self.support_vectors], dtype=np.float64)
        return self._norms

    def max_sv_norm_sq(self) -> float:
        norms = self.sv_norms_sq()
        return float(norms.max()) if norms.size else 0.0


class Dataset:
    """Labeled sparse instances."""

    def __init__(self, labels, instances, dimension=None):
        self.labels = list(labels)
        self.instances = list(instances)
        if len(self.labels) != len(self.instances):
            raise ApproxRbfError("labels and instances length mismatch")
        max_idx = max((v.max_index for v in self.instances), default=0)
        if dimension is None:
            dimension = max(max_idx, 1)
        elif max_idx > dimension:
            raise ApproxRbfError("instance index exceeds dimension")
        self.dimension = int(dimension)
        self._csr = None

    def __len__(self):
        return len(self.instances)

    def csr(self):
        if self._csr is None:
            self._csr = csr_arrays(self.instances)
        return self._csr

    def max_norm_sq(self) -> float:
        return max((v.norm_sq() for v in self.instances), default=0.0)


class ApproxModel:
    """Compact quadratic-form model: f(z) = e^{-g||z||^2}(c + v'z + z'Mz) + b.

    ``matrix`` is the full symmetric d x d matrix; only the upper triangle
    is persisted.
    """

    def __init__(self, gamma, bias, c, v, matrix, max_sv_norm_sq, dimension,
                 model_kind=KIND_CLASSIFIER, labels=None):
        v = np.ascontiguousarray(v, dtype=np.float64)
        matrix = np.ascontiguousarray(matrix, dtype=np.float64)
        if v.shape != (dimension,) or matrix.shape != (dimension, dimension):
            raise ApproxRbfError("v/M shape inconsistent with dimension")
        if not (np.all(np.isfinite(v)) and np.all(np.isfinite(matrix))):
            raise ApproxRbfError("non-finite entries in compact model")
        if model_kind == KIND_CLASSIFIER:
            if labels is None or len(labels) != 2:
                raise ApproxRbfError("classifier needs exactly two labels")
            labels = tuple(labels)
        else:
            labels = None
        self.gamma = float(gamma)
        self.bias = float(bias)
        self.c = float(c)
        self.v = v
        self.matrix = matrix
        self.max_sv_norm_sq = float(max_sv_norm_sq)
        self.dimension = int(dimension)
        self.model_kind = model_kind
        self.labels = labels

    def upper_triangle(self) -> np.ndarray:
        iu = np.triu_indices(self.dimension)
        return self.matrix[iu]

    @classmethod
    def from_upper_triangle(cls, gamma, bias, c, v, upper, max_sv_norm_sq,
                            dimension, model_kind=KIND_CLASSIFIER, labels=None):
        upper = np.asarray(upper, dtype=np.float64)
        if upper.size != dimension * (dimension + 1) // 2:
            raise ApproxRbfError("upper-triangle payload size mismatch")
        M = np.zeros((dimension, dimension), dtype=np.float64)
        iu = np.triu_indices(dimension)
        M[iu] = upper
        M.T[iu] = upper
        return cls(gamma, bias, c, v, M, max_sv_norm_sq, dimension,
                   model_kind, labels)
