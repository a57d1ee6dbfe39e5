"""Compare the compiled kernels with the pure-Python reference.

Run with ``python benchmarks/bench_kernels.py``. Both backends are timed
on the same inputs and their outputs are checked for equality.
"""

import argparse
import time

import numpy as np

from easyqg import _pykernels
from easyqg.partitions import enumerate_partitions

try:
    from easyqg import _ckernels
except ImportError:
    _ckernels = None


def _time(fn, *args, repeat=3):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_join(k):
    parts = enumerate_partitions("P", "", k)
    A = np.array([p.labels for p in parts], dtype=np.int32)
    return f"join counts P({k}) {len(parts)}x{len(parts)}", (A, A)


def bench_delta(k, N):
    parts = enumerate_partitions("P", "", k)
    lab = np.array([p.labels for p in parts], dtype=np.int32)
    idx = np.indices((N,) * k).reshape(k, -1).T.astype(np.int64)
    return f"delta table P({k}) x {N}^{k} indices", (lab, np.ascontiguousarray(idx))


def bench_kernel(k, N):
    idx = np.indices((N,) * k).reshape(k, -1).T.astype(np.int64)
    return f"kernel labels {N}^{k} tuples", (np.ascontiguousarray(idx),)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=6)
    ap.add_argument("--N", type=int, default=4)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels are not built; only the Python backend is available")
    cases = [
        ("join_block_counts",) + bench_join(args.k),
        ("delta_table",) + bench_delta(min(args.k, 5), args.N),
        ("kernel_labels",) + bench_kernel(args.k, args.N),
    ]
    print(f"{'case':45s} {'python [s]':>12s} {'cython [s]':>12s} {'speedup':>9s}")
    for name, label, inputs in cases:
        tp, outp = _time(getattr(_pykernels, name), *inputs, repeat=1)
        if _ckernels is None:
            print(f"{label:45s} {tp:12.4f} {'-':>12s} {'-':>9s}")
            continue
        tc, outc = _time(getattr(_ckernels, name), *inputs)
        if not np.array_equal(outp, outc):
            raise SystemExit(f"backends disagree on {name}")
        print(f"{label:45s} {tp:12.4f} {tc:12.4f} {tp / tc:9.1f}x")


if __name__ == "__main__":
    main()
