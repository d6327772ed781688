"""Exact-vs-approx comparison, prediction timing and model-size reporting."""

from __future__ import annotations

import os
import statistics
import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .approx import build_approx, decide_approx_batch
from .bounds import cauchy_bound_holds
from .errors import ApproxRbfError
from .exact import decide_exact_batch
from .models import Dataset, ExactModel, KIND_CLASSIFIER
from .sparse import SparseVector


@dataclass(frozen=True)
class ComparisonReport:
    n_test: int
    n_label_diff: int
    diff_fraction: float
    max_abs_decision_delta: float
    max_rel_decision_delta: float
    n_bound_violations: int


@dataclass(frozen=True)
class TimingReport:
    t_approx: float
    t_pred_exact: float
    t_pred_approx: float
    ratio1: float
    ratio2: float
    repetitions: int
    spread_approx: float
    spread_pred_exact: float
    spread_pred_approx: float
    checksum: float
    # (build, exact-predict, approx-predict) seconds for each repetition
    per_repetition: tuple = ()


@dataclass(frozen=True)
class SizeReport:
    exact_bytes: int
    approx_bytes: int

    @property
    def ratio(self) -> float:
        return self.exact_bytes / self.approx_bytes


def compare(model: ExactModel, data: Dataset,
            rel_floor: float = 1e-9) -> ComparisonReport:
    """Run both predictors over the dataset and summarize the disagreement.

    Label diffs are counted on predicted labels (not decision values);
    relative deltas only over instances with |exact| above ``rel_floor``.
    """
    approx = build_approx(model)
    exact_out = decide_exact_batch(model, data)
    approx_out = decide_approx_batch(approx, data, check_bound=True)

    n = len(data)
    n_diff = 0
    n_viol = 0
    max_abs = 0.0
    max_rel = 0.0
    for dv_exact, (dv_approx, bound_ok) in zip(exact_out, approx_out):
        if model.model_kind == KIND_CLASSIFIER and dv_exact.label != dv_approx.label:
            n_diff += 1
        if not bound_ok:
            n_viol += 1
        delta = abs(dv_exact.value - dv_approx.value)
        max_abs = max(max_abs, delta)
        if abs(dv_exact.value) > rel_floor:
            max_rel = max(max_rel, delta / abs(dv_exact.value))
    return ComparisonReport(
        n_test=n, n_label_diff=n_diff,
        diff_fraction=n_diff / n if n else 0.0,
        max_abs_decision_delta=max_abs, max_rel_decision_delta=max_rel,
        n_bound_violations=n_viol)


def time_prediction(model: ExactModel, data: Dataset,
                    repetitions: int = 5) -> TimingReport:
    """Time approximation build, exact prediction and approx prediction.

    Parsing/IO is excluded; decision values are checksummed so the timed
    work cannot be elided.
    """
    if repetitions < 3:
        raise ApproxRbfError("need at least 3 repetitions")
    # warm caches (CSR buffers, code paths) outside the timed region
    model.csr()
    model.sv_norms_sq()
    data.csr()
    build_approx(model)

    t_build, t_exact, t_approx = [], [], []
    checksum = 0.0
    for _ in range(repetitions):
        t0 = time.perf_counter()
        amodel = build_approx(model)
        t1 = time.perf_counter()
        exact_out = decide_exact_batch(model, data)
        t2 = time.perf_counter()
        approx_out = decide_approx_batch(amodel, data)
        t3 = time.perf_counter()
        t_build.append(t1 - t0)
        t_exact.append(t2 - t1)
        t_approx.append(t3 - t2)
        checksum += sum(dv.value for dv in exact_out)
        checksum += sum(dv.value for dv, _ in approx_out)

    mean_build = statistics.fmean(t_build)
    mean_exact = statistics.fmean(t_exact)
    mean_approx = statistics.fmean(t_approx)
    return TimingReport(
        t_approx=mean_build, t_pred_exact=mean_exact,
        t_pred_approx=mean_approx,
        ratio1=mean_exact / mean_approx,
        ratio2=mean_exact / (mean_approx + mean_build),
        repetitions=repetitions,
        spread_approx=statistics.stdev(t_build),
        spread_pred_exact=statistics.stdev(t_exact),
        spread_pred_approx=statistics.stdev(t_approx),
        checksum=checksum,
        per_repetition=tuple(zip(t_build, t_exact, t_approx)))


def size_report(exact_path, approx_path) -> SizeReport:
    for path in (exact_path, approx_path):
        if not os.path.exists(path):
            raise ApproxRbfError(f"no such file: {path}")
    return SizeReport(exact_bytes=os.path.getsize(exact_path),
                      approx_bytes=os.path.getsize(approx_path))


def _cluster_points(rng, n, d, separation, spread, sparsity):
    labels = np.where(rng.random(n) < 0.5, 1.0, -1.0)
    center = np.full(d, separation / np.sqrt(d))
    points = rng.normal(0.0, spread, size=(n, d)) + labels[:, None] * center
    if sparsity > 0.0:
        points[rng.random((n, d)) < sparsity] = 0.0
    return labels, points


def synthetic_dataset(n: int, d: int, seed: int, separation: float = 2.0,
                      spread: float = 1.0, sparsity: float = 0.0) -> Dataset:
    """Two Gaussian clusters (one per class), labels +1/-1."""
    rng = np.random.default_rng(seed)
    labels, points = _cluster_points(rng, n, d, separation, spread, sparsity)
    instances = [SparseVector.from_dense(row) for row in points]
    return Dataset(labels.tolist(), instances, dimension=d)


def synthetic_classifier_model(n_sv: int, d: int, gamma: float, seed: int,
                               separation: float = 2.0, spread: float = 1.0,
                               sparsity: float = 0.0,
                               bias: float = 0.0) -> ExactModel:
    """Random classifier-shaped model: cluster points as SVs, coefficient
    sign matching the cluster. A stand-in for a trained model at desk scale."""
    rng = np.random.default_rng(seed)
    labels, points = _cluster_points(rng, n_sv, d, separation, spread, sparsity)
    coefs = labels * rng.uniform(0.1, 1.0, n_sv)
    svs = [SparseVector.from_dense(row) for row in points]
    return ExactModel(gamma=gamma, bias=bias, coefficients=coefs,
                      support_vectors=svs, dimension=d,
                      model_kind=KIND_CLASSIFIER, labels=(1.0, -1.0))
