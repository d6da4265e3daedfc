#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the correlation optimizer and the decomposition descent on identical
workloads through both lanes and prints a timing table. Outcomes are
cross-checked while timing so a silent divergence would show up here.

Usage: python3 benchmarks/bench_kernels.py [--states N] [--repeat K]
"""
import argparse
import time

import numpy as np

from sepkit import _core_py
from sepkit.linalg import BipartiteDims
from sepkit.states import fano_decompose, random_mixed, random_separable

try:
    from sepkit import _core
except ImportError:
    _core = None

D22 = BipartiteDims(2, 2)


def bench_chsh(impl, taus, inits):
    t0 = time.perf_counter()
    values = [impl.chsh_ascend(tau, inits)[0] for tau in taus]
    return time.perf_counter() - t0, values


def bench_liqiao(impl, cases, max_iter):
    t0 = time.perf_counter()
    outcomes = []
    for f, p0, a0, b0 in cases:
        *_, res, _ = impl.liqiao_descend(f.r, f.s, f.tau, p0, a0, b0, max_iter)
        outcomes.append(max(res) <= 1e-6)
    return time.perf_counter() - t0, outcomes


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--states", type=int, default=50)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    taus = [fano_decompose(random_mixed(D22, 4, s)).tau for s in range(args.states)]
    inits = rng.standard_normal((32, 4, 3))
    inits /= np.linalg.norm(inits, axis=2, keepdims=True)

    cases = []
    for s in range(args.states):
        f = fano_decompose(random_separable(D22, 8, s))
        p0 = rng.dirichlet(np.ones(16))
        a0 = rng.standard_normal((16, 3))
        b0 = rng.standard_normal((16, 3))
        a0 /= np.linalg.norm(a0, axis=1, keepdims=True)
        b0 /= np.linalg.norm(b0, axis=1, keepdims=True)
        cases.append((f, p0, a0, b0))

    lanes = [("python", _core_py)]
    if _core is not None:
        lanes.insert(0, ("compiled", _core))
    else:
        print("compiled extension not available; timing the fallback only")

    print(f"{args.states} states per kernel, best of {args.repeat} runs\n")
    print(f"{'kernel':<16} {'lane':<10} {'total':>10} {'per state':>12}")
    results = {}
    for kernel, runner, payload in (
        ("chsh_ascend", bench_chsh, (taus, inits)),
        ("liqiao_descend", bench_liqiao, (cases, 5000)),
    ):
        for lane, impl in lanes:
            best, outcome = min(
                (runner(impl, *payload) for _ in range(args.repeat)),
                key=lambda pair: pair[0],
            )
            results[(kernel, lane)] = (best, outcome)
            print(f"{kernel:<16} {lane:<10} {best:>9.3f}s {best / args.states * 1e3:>10.2f}ms")
        if len(lanes) == 2:
            (t_c, out_c) = results[(kernel, "compiled")]
            (t_p, out_p) = results[(kernel, "python")]
            if kernel == "chsh_ascend":
                agree = max(abs(a - b) for a, b in zip(out_c, out_p)) < 1e-9
            else:
                agree = out_c == out_p
            print(f"{'':<16} speedup {t_p / t_c:.1f}x, outcomes agree: {agree}\n")


if __name__ == "__main__":
    main()
