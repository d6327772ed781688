"""Command-line front-end.

Data output goes to stdout or --output; diagnostics go to stderr. Exit
status is 0 iff the command succeeded.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import backend, bench, bounds, model_io, poly2
from .approx import (build_approx, decide_approx_batch,
                     maclaurin_relative_error)
from .errors import ApproxRbfError, DimensionError
from .exact import decide_exact_batch
from .models import KIND_CLASSIFIER


def _read(path):
    with open(path, "r") as fh:
        return fh.read()


def _open_out(path):
    return open(path, "w") if path else sys.stdout


def _fmt(x):
    return repr(float(x))


def cmd_approximate(args) -> int:
    model = model_io.parse_exact_model(_read(args.model))
    amodel = build_approx(model)
    with open(args.output, "w") as fh:
        fh.write(model_io.write_approx_model(amodel))
    print(f"d: {model.dimension}")
    print(f"n_sv: {model.n_sv}")
    print(f"max_sv_norm_sq: {_fmt(amodel.max_sv_norm_sq)}")
    print(f"gamma: {_fmt(model.gamma)}")
    print(f"gamma_max: {_fmt(bounds.gamma_max_for_model(model))}")
    return 0


def _check_instance_dims(data, dimension):
    for i, inst in enumerate(data.instances, start=1):
        if inst.max_index > dimension:
            raise DimensionError(
                f"instance {i}: feature index {inst.max_index} exceeds "
                f"model dimension {dimension}")


def cmd_predict(args) -> int:
    data = model_io.parse_dataset(_read(args.data))
    text = _read(args.model)
    if args.mode == "exact":
        model = model_io.parse_exact_model(text)
        _check_instance_dims(data, model.dimension)
        results = [(dv, None) for dv in decide_exact_batch(model, data)]
        kind, labels = model.model_kind, model.labels
    else:
        amodel = model_io.parse_approx_model(text)
        _check_instance_dims(data, amodel.dimension)
        results = decide_approx_batch(amodel, data, check_bound=args.check_bound)
        if not args.check_bound:
            results = [(dv, None) for dv, _ in results]
        kind, labels = amodel.model_kind, amodel.labels

    out = _open_out(args.output)
    try:
        for dv, bound_ok in results:
            label = dv.value if dv.label is None else dv.label
            line = f"{label:g}\t{_fmt(dv.value)}"
            if bound_ok is not None:
                line += "\tok" if bound_ok else "\tbound-violated"
            print(line, file=out)
    finally:
        if out is not sys.stdout:
            out.close()
    if kind == KIND_CLASSIFIER and labels is not None:
        hits = sum(1 for (dv, _), truth in zip(results, data.labels)
                   if dv.label == truth)
        print(f"accuracy: {100.0 * hits / len(data):.4f}%")
    return 0


def cmd_check_gamma(args) -> int:
    data = model_io.parse_dataset(_read(args.data))
    if not data.instances:
        raise ApproxRbfError("empty dataset")
    max_nsq = data.max_norm_sq()
    gamma_max = bounds.gamma_max_for_dataset(data)
    print(f"max_norm_sq: {_fmt(max_nsq)}")
    print(f"gamma_max: {_fmt(gamma_max)}")
    if args.gamma is not None:
        verdict = "ok" if args.gamma <= gamma_max else "exceeds-gamma-max"
        print(f"gamma {_fmt(args.gamma)}: {verdict}")
    return 0


def _load_model_and_data(args):
    model = model_io.parse_exact_model(_read(args.model))
    if args.data:
        data = model_io.parse_dataset(_read(args.data))
    else:
        data = bench.synthetic_dataset(args.synthetic, model.dimension,
                                       seed=args.seed)
    return model, data


def cmd_compare(args) -> int:
    model, data = _load_model_and_data(args)
    report = bench.compare(model, data)
    if args.output:
        amodel = build_approx(model)
        exact_out = decide_exact_batch(model, data)
        approx_out = decide_approx_batch(amodel, data, check_bound=True)
        with open(args.output, "w") as fh:
            fh.write("exact_value,approx_value,exact_label,approx_label,bound_ok\n")
            for dv_e, (dv_a, ok) in zip(exact_out, approx_out):
                fh.write(f"{_fmt(dv_e.value)},{_fmt(dv_a.value)},"
                         f"{dv_e.label},{dv_a.label},{int(ok)}\n")
    print(f"n_test: {report.n_test}")
    print(f"n_label_diff: {report.n_label_diff}")
    print(f"diff_fraction: {report.diff_fraction:.6f}")
    print(f"max_abs_decision_delta: {_fmt(report.max_abs_decision_delta)}")
    print(f"max_rel_decision_delta: {_fmt(report.max_rel_decision_delta)}")
    print(f"n_bound_violations: {report.n_bound_violations}")
    return 0


def cmd_bench(args) -> int:
    model, data = _load_model_and_data(args)
    report = bench.time_prediction(model, data, repetitions=args.reps)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write("t_approx,t_pred_exact,t_pred_approx\n")
            for tb, te, ta in report.per_repetition:
                fh.write(f"{_fmt(tb)},{_fmt(te)},{_fmt(ta)}\n")
    print(f"backend: {backend.BACKEND}")
    print(f"repetitions: {report.repetitions}")
    print(f"t_approx: {report.t_approx:.6f} +- {report.spread_approx:.6f}")
    print(f"t_pred_exact: {report.t_pred_exact:.6f} +- {report.spread_pred_exact:.6f}")
    print(f"t_pred_approx: {report.t_pred_approx:.6f} +- {report.spread_pred_approx:.6f}")
    print(f"ratio1: {report.ratio1:.2f}")
    print(f"ratio2: {report.ratio2:.2f}")
    return 0


def cmd_size(args) -> int:
    report = bench.size_report(args.exact, args.approx)
    print(f"exact_bytes: {report.exact_bytes}")
    print(f"approx_bytes: {report.approx_bytes}")
    print(f"ratio: {report.ratio:.4f}")
    return 0


def cmd_poly2_expand(args) -> int:
    model = model_io.parse_exact_model(_read(args.model), allow_poly2=True)
    expansion = poly2.expand_poly2(model)
    d = expansion.dimension
    iu = np.triu_indices(d)
    out = _open_out(args.output)
    try:
        print("approxsvm-poly2 v1", file=out)
        print(f"kind {expansion.model_kind}", file=out)
        if expansion.labels is not None:
            print("labels " + " ".join(_fmt(l) for l in expansion.labels), file=out)
        print(f"d {d}", file=out)
        print(f"b {_fmt(expansion.bias)}", file=out)
        print(f"c {_fmt(expansion.c)}", file=out)
        print("v " + " ".join(_fmt(x) for x in expansion.v), file=out)
        print("M " + " ".join(_fmt(x) for x in expansion.matrix[iu]), file=out)
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def _parse_range(spec: str):
    parts = spec.split(":")
    if len(parts) != 3:
        raise ApproxRbfError("range must be min:max:step")
    lo, hi, step = (float(p) for p in parts)
    if not (lo < hi and step > 0):
        raise ApproxRbfError("range must satisfy min < max and step > 0")
    return lo, hi, step


def cmd_error_curve(args) -> int:
    lo, hi, step = _parse_range(args.range)
    n = int(round((hi - lo) / step))
    xs = lo + step * np.arange(n + 1)
    xs = xs[xs <= hi + 1e-12]
    out = _open_out(args.output)
    try:
        print("x,relative_error", file=out)
        for x in xs:
            print(f"{_fmt(x)},{_fmt(maclaurin_relative_error(float(x)))}", file=out)
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="approxrbf",
        description="Quadratic-form approximation of RBF-kernel SVM models")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("approximate", help="convert a LIBSVM model to compact form")
    p.add_argument("--model", required=True)
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_approximate)

    p = sub.add_parser("predict", help="predict with an exact or compact model")
    p.add_argument("--model", required=True)
    p.add_argument("--data", required=True)
    p.add_argument("--mode", choices=["exact", "approx"], default="approx")
    p.add_argument("--check-bound", action="store_true")
    p.add_argument("--output")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("check-gamma", help="report gamma upper bound for a dataset")
    p.add_argument("--data", required=True)
    p.add_argument("--gamma", type=float, help="what-if value to check")
    p.set_defaults(func=cmd_check_gamma)

    for name, func in (("compare", cmd_compare), ("bench", cmd_bench)):
        p = sub.add_parser(name)
        p.add_argument("--model", required=True)
        p.add_argument("--data")
        p.add_argument("--synthetic", type=int, default=1000,
                       help="instances to generate when --data is omitted")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--output", help="per-instance / per-repetition CSV")
        if name == "bench":
            p.add_argument("--reps", type=int, default=5)
        p.set_defaults(func=func)

    p = sub.add_parser("size", help="compare model file sizes")
    p.add_argument("--exact", required=True)
    p.add_argument("--approx", required=True)
    p.set_defaults(func=cmd_size)

    p = sub.add_parser("poly2-expand", help="exact quadratic form of a degree-2 model")
    p.add_argument("--model", required=True)
    p.add_argument("--output")
    p.set_defaults(func=cmd_poly2_expand)

    p = sub.add_parser("error-curve",
                       help="CSV of the series' relative error over a grid")
    p.add_argument("--range", required=True, metavar="MIN:MAX:STEP")
    p.add_argument("--output")
    p.set_defaults(func=cmd_error_curve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ApproxRbfError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
