"""Sparse vectors with 1-based, strictly ascending indices (LIBSVM convention)."""

from __future__ import annotations

import math

import numpy as np

from .errors import ApproxRbfError


class SparseVector:
    """Immutable sparse vector stored as parallel index/value arrays.

    Indices are 1-based and strictly ascending; values are finite floats.
    """

    __slots__ = ("indices", "values")

    def __init__(self, indices, values):
        idx = np.asarray(indices, dtype=np.int64)
        val = np.asarray(values, dtype=np.float64)
        if idx.shape != val.shape or idx.ndim != 1:
            raise ApproxRbfError("indices and values must be 1-d arrays of equal length")
        if idx.size:
            if idx[0] < 1 or np.any(np.diff(idx) <= 0):
                raise ApproxRbfError("indices must be strictly ascending and >= 1")
            if not np.all(np.isfinite(val)):
                raise ApproxRbfError("values must be finite")
        idx.setflags(write=False)
        val.setflags(write=False)
        object.__setattr__(self, "indices", idx)
        object.__setattr__(self, "values", val)

    def __setattr__(self, name, value):
        raise AttributeError("SparseVector is immutable")

    @classmethod
    def from_pairs(cls, pairs) -> "SparseVector":
        pairs = list(pairs)
        return cls([i for i, _ in pairs], [v for _, v in pairs])

    @classmethod
    def from_dense(cls, dense) -> "SparseVector":
        dense = np.asarray(dense, dtype=np.float64)
        nz = np.nonzero(dense)[0]
        return cls(nz + 1, dense[nz])

    @property
    def nnz(self) -> int:
        return int(self.indices.size)

    @property
    def max_index(self) -> int:
        return int(self.indices[-1]) if self.indices.size else 0

    def norm_sq(self) -> float:
        return float(self.values @ self.values)

    def dot(self, other: "SparseVector") -> float:
        """Inner product by merged traversal of the two index sets."""
        a, b = self, other
        if a.nnz == 0 or b.nnz == 0:
            return 0.0
        pos = np.searchsorted(a.indices, b.indices)
        pos_ok = pos < a.nnz
        hits = np.zeros(b.nnz, dtype=bool)
        hits[pos_ok] = a.indices[pos[pos_ok]] == b.indices[pos_ok]
        if not hits.any():
            return 0.0
        return float(a.values[pos[hits]] @ b.values[hits])

    def dist_sq(self, other: "SparseVector") -> float:
        d = self.norm_sq() + other.norm_sq() - 2.0 * self.dot(other)
        return max(d, 0.0)

    def to_dense(self, dim: int) -> np.ndarray:
        if self.max_index > dim:
            raise ApproxRbfError(f"index {self.max_index} exceeds dimension {dim}")
        out = np.zeros(dim, dtype=np.float64)
        out[self.indices - 1] = self.values
        return out

    def __eq__(self, other):
        return (
            isinstance(other, SparseVector)
            and np.array_equal(self.indices, other.indices)
            and np.array_equal(self.values, other.values)
        )

    def __hash__(self):
        return hash((self.indices.tobytes(), self.values.tobytes()))

    def __repr__(self):
        body = " ".join(f"{i}:{v:g}" for i, v in zip(self.indices, self.values))
        return f"SparseVector({body})"


def norm(v: SparseVector) -> float:
    return math.sqrt(v.norm_sq())
