"""Benchmark the compiled kernel against the pure-Python fallback.

Runs the same kernel-level workloads through both implementations and
reports best-of-N wall times plus the speedup.  The structured workload
is the hot path of the verification suite: products of the large squared
symmetry generators.

Usage: python3 benchmarks/bench_kernel.py [--repeat N] [--seed S]
"""

import argparse
import random
import time

from dunklweyl._kernel import pykernel

try:
    from dunklweyl._kernel import _core
except ImportError:
    _core = None


def rand_bn(rng):
    return pykernel.bn_make(rng.randint(-9, 9), rng.randint(-9, 9),
                            rng.randint(-9, 9), rng.randint(-9, 9),
                            rng.randint(1, 9))


def rand_poly(rng, nvars, terms):
    out = {}
    for _ in range(terms):
        b = rand_bn(rng)
        if b[0] or b[1] or b[2] or b[3]:
            out[tuple(rng.randint(0, 4) for _ in range(nvars))] = b
    return out or {(0,) * nvars: pykernel.BN_ONE}


def rand_op(rng, nvars, terms):
    out = {}
    for _ in range(terms):
        flat = []
        for _ in range(nvars):
            flat += [rng.randint(-3, 4), rng.randint(0, 3),
                     rng.randint(0, 1)]
        out[tuple(flat)] = rand_poly(rng, nvars, 3)
    return out


def build_workloads(seed):
    rng = random.Random(seed)
    bn_pairs = [(rand_bn(rng), rand_bn(rng)) for _ in range(20000)]
    poly_pairs = [(rand_poly(rng, 2, 8), rand_poly(rng, 2, 8))
                  for _ in range(400)]
    op_pairs = [(rand_op(rng, 2, 6), rand_op(rng, 2, 6))
                for _ in range(60)]

    from dunklweyl.builders import build
    kplus = build("K+", 2).kernel_op
    kminus = build("K-", 2).kernel_op

    return [
        ("bn_mul x20000",
         lambda k: [k.bn_mul(a, b) for a, b in bn_pairs]),
        ("poly_mul x400",
         lambda k: [k.poly_mul(p, q) for p, q in poly_pairs]),
        ("op_mul random x60",
         lambda k: [k.op_mul(a, b, 2) for a, b in op_pairs]),
        ("op_mul K-*K+ x10",
         lambda k: [k.op_mul(kminus, kplus, 2) for _ in range(10)]),
    ]


def best_of(fn, kernel, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn(kernel)
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=12345)
    args = parser.parse_args()

    workloads = build_workloads(args.seed)
    print(f"{'workload':<22} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for name, fn in workloads:
        py = best_of(fn, pykernel, args.repeat)
        if _core is None:
            print(f"{name:<22} {py * 1e3:>8.2f}ms {'n/a':>10} {'n/a':>8}")
            continue
        cy = best_of(fn, _core, args.repeat)
        print(f"{name:<22} {py * 1e3:>8.2f}ms {cy * 1e3:>8.2f}ms "
              f"{py / cy:>7.2f}x")
    if _core is None:
        print("compiled kernel not available; showing python timings only")


if __name__ == "__main__":
    main()
