# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled implementations of the hot kernels (see _purecore.py for the
reference versions and the shared interface)."""

import numpy as np

cimport numpy as cnp
from libc.math cimport exp

cnp.import_array()

NAME = "compiled"


def exact_batch(cnp.int64_t[::1] sv_indptr, cnp.int64_t[::1] sv_idx,
                double[::1] sv_val, double[::1] sv_norm_sq, double[::1] coef,
                double gamma, double bias,
                cnp.int64_t[::1] z_indptr, cnp.int64_t[::1] z_idx,
                double[::1] z_val, Py_ssize_t dim):
    cdef Py_ssize_t n = z_indptr.shape[0] - 1
    cdef Py_ssize_t nsv = coef.shape[0]
    cdef cnp.ndarray[double, ndim=1] out = np.empty(n, dtype=np.float64)
    cdef cnp.ndarray[double, ndim=1] dense = np.zeros(dim, dtype=np.float64)
    cdef double[::1] dz = dense
    cdef Py_ssize_t t, i, j, lo, hi
    cdef double znorm, dot, acc

    for t in range(n):
        lo = z_indptr[t]; hi = z_indptr[t + 1]
        znorm = 0.0
        for j in range(lo, hi):
            dz[z_idx[j]] = z_val[j]
            znorm += z_val[j] * z_val[j]
        acc = 0.0
        for i in range(nsv):
            dot = 0.0
            for j in range(sv_indptr[i], sv_indptr[i + 1]):
                dot += sv_val[j] * dz[sv_idx[j]]
            acc += coef[i] * exp(-gamma * (sv_norm_sq[i] + znorm - 2.0 * dot))
        out[t] = acc + bias
        for j in range(lo, hi):
            dz[z_idx[j]] = 0.0
    return out


def approx_batch(double c, double[::1] v, double[:, ::1] M, double gamma,
                 double bias, cnp.int64_t[::1] z_indptr,
                 cnp.int64_t[::1] z_idx, double[::1] z_val):
    cdef Py_ssize_t n = z_indptr.shape[0] - 1
    cdef cnp.ndarray[double, ndim=1] out = np.empty(n, dtype=np.float64)
    cdef cnp.ndarray[double, ndim=1] norms = np.empty(n, dtype=np.float64)
    cdef Py_ssize_t t, j, k, lo, hi
    cdef double znorm, lin, quad, row
    cdef cnp.int64_t ji

    for t in range(n):
        lo = z_indptr[t]; hi = z_indptr[t + 1]
        znorm = 0.0
        lin = 0.0
        quad = 0.0
        for j in range(lo, hi):
            ji = z_idx[j]
            znorm += z_val[j] * z_val[j]
            lin += v[ji] * z_val[j]
            row = 0.0
            for k in range(lo, hi):
                row += M[ji, z_idx[k]] * z_val[k]
            quad += z_val[j] * row
        out[t] = exp(-gamma * znorm) * (c + lin + quad) + bias
        norms[t] = znorm
    return out, norms


def quad_batch(double c, double[::1] v, double[:, ::1] M, double bias,
               cnp.int64_t[::1] z_indptr, cnp.int64_t[::1] z_idx,
               double[::1] z_val):
    cdef Py_ssize_t n = z_indptr.shape[0] - 1
    cdef cnp.ndarray[double, ndim=1] out = np.empty(n, dtype=np.float64)
    cdef Py_ssize_t t, j, k, lo, hi
    cdef double lin, quad, row
    cdef cnp.int64_t ji

    for t in range(n):
        lo = z_indptr[t]; hi = z_indptr[t + 1]
        lin = 0.0
        quad = 0.0
        for j in range(lo, hi):
            ji = z_idx[j]
            lin += v[ji] * z_val[j]
            row = 0.0
            for k in range(lo, hi):
                row += M[ji, z_idx[k]] * z_val[k]
            quad += z_val[j] * row
        out[t] = c + lin + quad + bias
    return out


def build_cvm(cnp.int64_t[::1] sv_indptr, cnp.int64_t[::1] sv_idx,
              double[::1] sv_val, double[::1] coef, double gamma,
              Py_ssize_t dim):
    cdef Py_ssize_t nsv = coef.shape[0]
    cdef cnp.ndarray[double, ndim=1] v = np.zeros(dim, dtype=np.float64)
    cdef cnp.ndarray[double, ndim=2] M = np.zeros((dim, dim), dtype=np.float64)
    cdef double[::1] vv = v
    cdef double[:, ::1] mm = M
    cdef double c = 0.0, max_nsq = 0.0, nsq, a, wj
    cdef Py_ssize_t i, j, k, lo, hi
    cdef cnp.int64_t ji

    for i in range(nsv):
        lo = sv_indptr[i]; hi = sv_indptr[i + 1]
        nsq = 0.0
        for j in range(lo, hi):
            nsq += sv_val[j] * sv_val[j]
        if nsq > max_nsq:
            max_nsq = nsq
        a = coef[i] * exp(-gamma * nsq)
        c += a
        for j in range(lo, hi):
            ji = sv_idx[j]
            vv[ji] += 2.0 * gamma * a * sv_val[j]
            wj = 2.0 * gamma * gamma * a * sv_val[j]
            for k in range(lo, hi):
                mm[ji, sv_idx[k]] += wj * sv_val[k]
    return c, v, M, max_nsq
