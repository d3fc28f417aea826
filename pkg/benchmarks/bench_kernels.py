"""Compare the compiled and pure-Python kernels on the same workloads.

    python benchmarks/bench_kernels.py [--repeat R] [--quick]

Each workload runs on both backends; outputs are checked to be identical
before timings are reported.
"""

from __future__ import annotations

import argparse
import random
import statistics
import sys
import time

from nutgraphs import _pykernels

try:
    from nutgraphs import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def _generate(mod, n, lo, hi, connected):
    return mod.expand(n, [0] * n, 0, n, lo, hi, connected)


def _nullities(mod, graphs):
    return [mod.nullity_mod_p(n, adj) for n, adj in graphs]


def _canon(mod, graphs):
    return [mod.is_canonical(n, adj, n) for n, adj in graphs]


def _random_graphs(count, n, seed=0):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        adj = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < 0.5:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
        out.append((n, adj))
    return out


def workloads(quick: bool):
    yield "all graphs n=7", lambda m: _generate(m, 7, 0, 6, False)
    yield "cubic n=14", lambda m: _generate(m, 14, 3, 3, True)
    if not quick:
        yield "all graphs n=8", lambda m: _generate(m, 8, 0, 7, False)
        yield "cubic n=16", lambda m: _generate(m, 16, 3, 3, True)
        yield "quartic n=12", lambda m: _generate(m, 12, 4, 4, True)
    sample = _random_graphs(2000, 20)
    yield "nullity mod p, 2000 x n=20", lambda m: _nullities(m, sample)
    yield "canonicity test, 2000 x n=20", lambda m: _canon(m, sample)


def _time(fn, repeat):
    best = []
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best.append(time.perf_counter() - t0)
    return min(best), statistics.median(best), result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="skip the slower generation workloads")
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled extension not available; build with `pip install -e .`", file=sys.stderr)
        return 1
    print(f"{'workload':32} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, fn in workloads(args.quick):
        py_best, _, py_out = _time(lambda: fn(_pykernels), 1 if "n=16" in name else args.repeat)
        c_best, _, c_out = _time(lambda: fn(_ckernels), args.repeat)
        if py_out != c_out:
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        print(f"{name:32} {py_best:10.3f} {c_best:10.3f} {py_best / c_best:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
