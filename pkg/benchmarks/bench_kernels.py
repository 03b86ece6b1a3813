"""Throughput of the fixed-order conv/matmul kernels: numba vs pure numpy, plus the BLAS fast path.

Run: python benchmarks/bench_kernels.py [--reps N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from panodiff import _accel
from panodiff.tensor import Tensor, ops, ordered


def _time(fn, reps: int) -> float:
    fn()  # warm-up (and jit compile)
    start = time.perf_counter()
    for _ in range(reps):
        fn()
    return (time.perf_counter() - start) / reps


def main() -> None:
    parser = argparse.ArgumentParser(description="Benchmark panodiff kernels")
    parser.add_argument("--reps", type=int, default=5)
    parser.add_argument("--batch", type=int, default=8)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    # one denoiser-sized conv level: 32 -> 32 channels on the 16 x 64 latent grid
    x = rng.standard_normal((args.batch, 32, 16, 64)).astype(np.float32)
    w = rng.standard_normal((32, 32, 3, 3)).astype(np.float32)
    a = rng.standard_normal((args.batch, 256, 64)).astype(np.float32)
    b = rng.standard_normal((args.batch, 64, 8)).astype(np.float32)

    def conv():
        return ops.conv2d_circular(Tensor(x), Tensor(w)).data

    def bmm():
        return _accel.bmm_ordered(a, b)

    prev = _accel.use_numba()
    rows = []
    try:
        for label, flag in (("numba", True), ("numpy", False)):
            if flag and not _accel.HAVE_NUMBA:
                continue
            _accel.use_numba(flag)
            with ordered(True):
                rows.append((f"conv ordered/{label}", _time(conv, args.reps)))
            rows.append((f"bmm ordered/{label}", _time(bmm, args.reps)))
    finally:
        _accel.use_numba(prev)
    with ordered(False):
        rows.append(("conv fast/BLAS", _time(conv, args.reps)))
    rows.append(("bmm numpy matmul", _time(lambda: a @ b, args.reps)))

    print("bench_kernels")
    print(f"batch={args.batch} reps={args.reps} backend={_accel.backend_name()}")
    for name, sec in rows:
        print(f"{name:<22} {1e3 * sec:9.2f} ms")


if __name__ == "__main__":
    main()
