"""Pure-numpy implementations of the hot kernels.

Fallback used when the compiled extension is unavailable; the two backends
share this exact interface (see backend.py). All index arrays here are
0-based CSR-style buffers.
"""

from __future__ import annotations

import numpy as np

NAME = "python"


def _segment_sums(prod: np.ndarray, indptr: np.ndarray) -> np.ndarray:
    # cumsum-diff handles empty segments, unlike add.reduceat
    cs = np.concatenate(([0.0], np.cumsum(prod)))
    return cs[indptr[1:]] - cs[indptr[:-1]]


def exact_batch(sv_indptr, sv_idx, sv_val, sv_norm_sq, coef, gamma, bias,
                z_indptr, z_idx, z_val, dim):
    """Exact RBF decision values for a batch of sparse instances."""
    n = len(z_indptr) - 1
    out = np.empty(n, dtype=np.float64)
    dense_z = np.zeros(dim, dtype=np.float64)
    for t in range(n):
        lo, hi = z_indptr[t], z_indptr[t + 1]
        zi = z_idx[lo:hi]
        zv = z_val[lo:hi]
        dense_z[zi] = zv
        znorm = float(zv @ zv)
        dots = _segment_sums(sv_val * dense_z[sv_idx], sv_indptr)
        dist = sv_norm_sq + znorm - 2.0 * dots
        out[t] = float(coef @ np.exp(-gamma * dist)) + bias
        dense_z[zi] = 0.0
    return out


def approx_batch(c, v, M, gamma, bias, z_indptr, z_idx, z_val):
    """Quadratic-form decision values plus squared instance norms."""
    n = len(z_indptr) - 1
    out = np.empty(n, dtype=np.float64)
    norms = np.empty(n, dtype=np.float64)
    for t in range(n):
        lo, hi = z_indptr[t], z_indptr[t + 1]
        zi = z_idx[lo:hi]
        zv = z_val[lo:hi]
        znorm = float(zv @ zv)
        vz = float(v[zi] @ zv)
        zmz = float(zv @ (M[np.ix_(zi, zi)] @ zv))
        out[t] = np.exp(-gamma * znorm) * (c + vz + zmz) + bias
        norms[t] = znorm
    return out, norms


def quad_batch(c, v, M, bias, z_indptr, z_idx, z_val):
    """Plain quadratic form c + v'z + z'Mz + b (no exponential prefactor)."""
    n = len(z_indptr) - 1
    out = np.empty(n, dtype=np.float64)
    for t in range(n):
        lo, hi = z_indptr[t], z_indptr[t + 1]
        zi = z_idx[lo:hi]
        zv = z_val[lo:hi]
        out[t] = c + float(v[zi] @ zv) + float(zv @ (M[np.ix_(zi, zi)] @ zv)) + bias
    return out


def build_cvm(sv_indptr, sv_idx, sv_val, coef, gamma, dim):
    """Accumulate the compact-model parameters c, v, M over all SVs.

    Returns (c, v, M, max_sv_norm_sq) with M the full symmetric matrix.
    """
    c = 0.0
    v = np.zeros(dim, dtype=np.float64)
    M = np.zeros((dim, dim), dtype=np.float64)
    max_nsq = 0.0
    for i in range(len(coef)):
        lo, hi = sv_indptr[i], sv_indptr[i + 1]
        xi = sv_idx[lo:hi]
        xv = sv_val[lo:hi]
        nsq = float(xv @ xv)
        max_nsq = max(max_nsq, nsq)
        a = coef[i] * np.exp(-gamma * nsq)
        c += a
        v[xi] += (2.0 * gamma * a) * xv
        M[np.ix_(xi, xi)] += (2.0 * gamma * gamma * a) * np.outer(xv, xv)
    return c, v, M, max_nsq
