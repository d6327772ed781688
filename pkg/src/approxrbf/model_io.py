"""Parsing of LIBSVM model/data files and the compact-model text format."""

from __future__ import annotations

import math
from typing import List, TextIO, Union

import numpy as np

from .errors import FormatVersionError, ParseError, UnsupportedModelError
from .models import (KIND_CLASSIFIER, KIND_REGRESSOR, ApproxModel, Dataset,
                     ExactModel, Poly2Params)
from .sparse import SparseVector

APPROX_MAGIC = "approxsvm-model v1"

_CLASSIFIER_TYPES = {"c_svc", "nu_svc"}
_REGRESSOR_TYPES = {"epsilon_svr", "nu_svr"}


def _lines(source: Union[str, TextIO]) -> List[str]:
    if isinstance(source, str):
        return source.splitlines()
    return source.read().splitlines()


def _parse_float(tok: str, lineno: int) -> float:
    try:
        x = float(tok)
    except ValueError:
        raise ParseError(f"bad number {tok!r}", lineno) from None
    if not math.isfinite(x):
        raise ParseError(f"non-finite number {tok!r}", lineno)
    return x


def _parse_features(tokens, lineno: int) -> SparseVector:
    indices = []
    values = []
    prev = 0
    for tok in tokens:
        part = tok.split(":")
        if len(part) != 2:
            raise ParseError(f"bad feature {tok!r}", lineno)
        try:
            idx = int(part[0])
        except ValueError:
            raise ParseError(f"bad feature index {part[0]!r}", lineno) from None
        if idx <= prev:
            raise ParseError(f"feature indices not strictly ascending at {tok!r}", lineno)
        prev = idx
        indices.append(idx)
        values.append(_parse_float(part[1], lineno))
    return SparseVector(indices, values)


def parse_exact_model(source: Union[str, TextIO], allow_poly2: bool = False) -> ExactModel:
    """Parse a LIBSVM text model.

    Supports binary classifiers and epsilon/nu regression models with an RBF
    kernel. With ``allow_poly2`` a degree-2 polynomial kernel is also
    accepted (used by the poly2 expansion path).
    """
    lines = _lines(source)
    header = {}
    sv_start = None
    for n, line in enumerate(lines, start=1):
        stripped = line.strip()
        if stripped == "SV":
            sv_start = n
            break
        if not stripped:
            continue
        key, _, rest = stripped.partition(" ")
        header[key] = rest.strip()
    if sv_start is None:
        raise ParseError("missing SV section", len(lines))

    svm_type = header.get("svm_type", "c_svc")
    kernel_type = header.get("kernel_type")
    if kernel_type is None:
        raise ParseError("missing kernel_type header", sv_start)

    poly_params = None
    if kernel_type == "rbf":
        kernel = "rbf"
    elif kernel_type == "polynomial" and allow_poly2:
        degree = int(header.get("degree", "3"))
        if degree != 2:
            raise UnsupportedModelError(
                f"polynomial degree {degree} not supported (degree 2 only)")
        kernel = "poly2"
        poly_params = Poly2Params(
            gamma=float(header.get("gamma", "1")),
            beta=float(header.get("coef0", "0")))
    else:
        raise UnsupportedModelError(f"unsupported kernel type {kernel_type!r}")

    if svm_type in _CLASSIFIER_TYPES:
        nr_class = int(header.get("nr_class", "2"))
        if nr_class != 2:
            raise UnsupportedModelError(
                f"{nr_class}-class model not supported: one-vs-one multi-class "
                "decomposition is out of scope")
        kind = KIND_CLASSIFIER
        label_field = header.get("label")
        if label_field is None:
            raise ParseError("classifier model lacks label line", sv_start)
        labels = tuple(float(tok) for tok in label_field.split())
        if len(labels) != 2:
            raise ParseError("expected two labels", sv_start)
    elif svm_type in _REGRESSOR_TYPES:
        kind = KIND_REGRESSOR
        labels = None
    else:
        raise UnsupportedModelError(f"unsupported svm_type {svm_type!r}")

    if "gamma" not in header:
        raise ParseError("missing gamma header", sv_start)
    gamma = _parse_float(header["gamma"], sv_start)
    if "rho" not in header:
        raise ParseError("missing rho header", sv_start)
    rho_tokens = header["rho"].split()
    if len(rho_tokens) != 1:
        raise UnsupportedModelError("multiple rho values imply a multi-class model")
    bias = -_parse_float(rho_tokens[0], sv_start)
    if "total_sv" not in header:
        raise ParseError("missing total_sv header", sv_start)
    total_sv = int(header["total_sv"])

    coefs = []
    svs = []
    for n, line in enumerate(lines[sv_start:], start=sv_start + 1):
        stripped = line.strip()
        if not stripped:
            continue
        tokens = stripped.split()
        coefs.append(_parse_float(tokens[0], n))
        svs.append(_parse_features(tokens[1:], n))
    if len(svs) != total_sv:
        raise ParseError(
            f"total_sv says {total_sv} but found {len(svs)} SV lines", len(lines))
    if not svs:
        raise ParseError("model has no support vectors", len(lines))

    return ExactModel(gamma=gamma, bias=bias, coefficients=coefs,
                      support_vectors=svs, dimension=None, model_kind=kind,
                      labels=labels, kernel=kernel, poly_params=poly_params)


def parse_dataset(source: Union[str, TextIO]) -> Dataset:
    """Parse LIBSVM-format data: one `<label> <idx>:<val> ...` per line."""
    labels = []
    instances = []
    for n, line in enumerate(_lines(source), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        tokens = stripped.split()
        labels.append(_parse_float(tokens[0], n))
        instances.append(_parse_features(tokens[1:], n))
    return Dataset(labels, instances)


def _fmt(x: float) -> str:
    return repr(float(x))


def write_approx_model(model: ApproxModel) -> str:
    """Serialize a compact model; all reals keep full round-trip precision."""
    out = [APPROX_MAGIC, f"kind {model.model_kind}"]
    if model.model_kind == KIND_CLASSIFIER:
        out.append("labels " + " ".join(_fmt(l) for l in model.labels))
    out.append(f"d {model.dimension}")
    out.append(f"gamma {_fmt(model.gamma)}")
    out.append(f"b {_fmt(model.bias)}")
    out.append(f"c {_fmt(model.c)}")
    out.append(f"max_sv_norm_sq {_fmt(model.max_sv_norm_sq)}")
    out.append("v " + " ".join(_fmt(x) for x in model.v))
    out.append("M " + " ".join(_fmt(x) for x in model.upper_triangle()))
    return "\n".join(out) + "\n"


def parse_approx_model(source: Union[str, TextIO]) -> ApproxModel:
    lines = [l for l in _lines(source) if l.strip()]
    if not lines or lines[0].strip() != APPROX_MAGIC:
        got = lines[0].strip() if lines else "<empty>"
        raise FormatVersionError(f"expected {APPROX_MAGIC!r}, got {got!r}", 1)
    fields = {}
    for n, line in enumerate(lines[1:], start=2):
        key, _, rest = line.strip().partition(" ")
        if key in fields:
            raise ParseError(f"duplicate field {key!r}", n)
        fields[key] = (rest, n)

    def need(key):
        if key not in fields:
            raise ParseError(f"missing field {key!r}", len(lines))
        return fields[key]

    kind, n = need("kind")
    if kind not in (KIND_CLASSIFIER, KIND_REGRESSOR):
        raise ParseError(f"unknown kind {kind!r}", n)
    labels = None
    if kind == KIND_CLASSIFIER:
        raw, n = need("labels")
        labels = tuple(_parse_float(tok, n) for tok in raw.split())
        if len(labels) != 2:
            raise ParseError("expected two labels", n)
    raw, n = need("d")
    try:
        d = int(raw)
    except ValueError:
        raise ParseError(f"bad dimension {raw!r}", n) from None
    if d < 1:
        raise ParseError(f"bad dimension {d}", n)
    scalars = {}
    for key in ("gamma", "b", "c", "max_sv_norm_sq"):
        raw, n = need(key)
        scalars[key] = _parse_float(raw, n)
    raw, n = need("v")
    v = np.array([_parse_float(tok, n) for tok in raw.split()], dtype=np.float64)
    if v.size != d:
        raise ParseError(f"v has {v.size} entries, expected {d}", n)
    raw, n = need("M")
    upper = np.array([_parse_float(tok, n) for tok in raw.split()], dtype=np.float64)
    if upper.size != d * (d + 1) // 2:
        raise ParseError(
            f"M has {upper.size} entries, expected {d * (d + 1) // 2}", n)
    return ApproxModel.from_upper_triangle(
        gamma=scalars["gamma"], bias=scalars["b"], c=scalars["c"], v=v,
        upper=upper, max_sv_norm_sq=scalars["max_sv_norm_sq"], dimension=d,
        model_kind=kind, labels=labels)
