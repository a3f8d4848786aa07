#!/usr/bin/env python3
"""Benchmark the edit-distance kernels: numba JIT vs numpy fallback.

The same comparison applies to whole-corpus evaluation, where these
kernels dominate runtime.  Run from the repo root:

    python3 benchmarks/bench_kernels.py --pairs 2000 --max-len 40

Setting RADTREE_NO_NUMBA=1 makes the library itself use the numpy path;
this script always times both implementations directly.
"""

import argparse
import random
import time

from radtree import _kernels

CJK_START, CJK_END = 0x4E00, 0x9FFF


def make_pairs(rng, count, min_len, max_len):
    def text():
        n = rng.randint(min_len, max_len)
        return "".join(chr(rng.randint(CJK_START, CJK_END)) for _ in range(n))

    return [(_kernels.encode(text()), _kernels.encode(text())) for _ in range(count)]


def timed(func, pairs):
    start = time.perf_counter()
    checksum = 0
    for a, b in pairs:
        checksum += func(a, b)
    return time.perf_counter() - start, checksum


def python_distance(a, b):
    n, m = len(a), len(b)
    prev = list(range(m + 1))
    for i in range(1, n + 1):
        cur = [i] + [0] * m
        ai = a[i - 1]
        for j in range(1, m + 1):
            cost = 0 if ai == b[j - 1] else 1
            cur[j] = min(prev[j - 1] + cost, prev[j] + 1, cur[j - 1] + 1)
        prev = cur
    return prev[m]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--pairs", type=int, default=2000)
    parser.add_argument("--min-len", type=int, default=5)
    parser.add_argument("--max-len", type=int, default=40)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--skip-python", action="store_true",
                        help="skip the pure-python baseline")
    args = parser.parse_args()

    rng = random.Random(args.seed)
    pairs = make_pairs(rng, args.pairs, args.min_len, args.max_len)

    candidates = []
    if _kernels.HAVE_NUMBA:
        _kernels._distance_jit(*pairs[0])  # compile before timing
        candidates.append(("numba @njit", _kernels._distance_jit))
    else:
        print("numba unavailable or disabled; timing the fallback only")
    candidates.append(("numpy fallback", _kernels._distance_np))
    if not args.skip_python:
        candidates.append(("pure python", python_distance))

    results = []
    checksums = set()
    for name, func in candidates:
        elapsed, checksum = timed(func, pairs)
        checksums.add(checksum)
        results.append((name, elapsed))
    assert len(checksums) == 1, "implementations disagree"

    base = results[-1][1] if len(results) > 1 else results[0][1]
    print(f"\n{args.pairs} pairs, lengths {args.min_len}..{args.max_len} "
          f"(checksum {checksums.pop()})")
    print(f"{'backend':<16} {'seconds':>9} {'pairs/s':>10} {'speedup':>8}")
    for name, elapsed in results:
        print(f"{name:<16} {elapsed:>9.3f} {args.pairs / elapsed:>10.0f} "
              f"{base / elapsed:>7.1f}x")


if __name__ == "__main__":
    main()
