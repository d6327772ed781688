"""Compare the compiled extension against the pure-numpy fallback on the
three hot kernels: exact batch prediction, compact-model build, and
quadratic-form batch prediction.

Usage: python benchmarks/bench_backends.py [--n-sv 5000] [--d 50] [--n 500]
"""

import argparse
import time

import numpy as np

from approxrbf.backend import get_core
from approxrbf.bench import synthetic_classifier_model, synthetic_dataset


def best_of(fn, reps=5):
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n-sv", type=int, default=5000)
    parser.add_argument("--d", type=int, default=50)
    parser.add_argument("--n", type=int, default=500)
    parser.add_argument("--reps", type=int, default=5)
    args = parser.parse_args()

    model = synthetic_classifier_model(args.n_sv, args.d, 0.001, seed=1)
    data = synthetic_dataset(args.n, args.d, seed=2)
    sp, si, sv = model.csr()
    norms = model.sv_norms_sq()
    zp, zi, zv = data.csr()

    try:
        backends = {"compiled": get_core("compiled")}
    except ImportError:
        print("compiled extension not built; benchmarking fallback only")
        backends = {}
    backends["python"] = get_core("python")

    ref = backends["python"]
    c, v, M, _ = ref.build_cvm(sp, si, sv, model.coefficients, model.gamma,
                               model.dimension)
    M = np.triu(M) + np.triu(M, 1).T

    print(f"n_sv={args.n_sv} d={args.d} instances={args.n} "
          f"(best of {args.reps})")
    header = f"{'kernel':<14}" + "".join(f"{name:>12}" for name in backends)
    print(header)
    rows = {
        "exact_batch": lambda core: core.exact_batch(
            sp, si, sv, norms, model.coefficients, model.gamma, model.bias,
            zp, zi, zv, model.dimension),
        "build_cvm": lambda core: core.build_cvm(
            sp, si, sv, model.coefficients, model.gamma, model.dimension),
        "approx_batch": lambda core: core.approx_batch(
            c, v, M, model.gamma, model.bias, zp, zi, zv),
    }
    for name, call in rows.items():
        line = f"{name:<14}"
        for core in backends.values():
            t = best_of(lambda: call(core), args.reps)
            line += f"{t * 1e3:>10.2f}ms"
        print(line)


if __name__ == "__main__":
    main()
