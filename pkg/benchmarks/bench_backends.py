"""Benchmark the exhaustive sweep kernels: numba vs pure numpy.

The two backends implement the same contracts (per-length maxima of
|ScatFact_k| over all words of a given universality index, and pointwise
dominance checks), so this compares wall time only.  JIT compilation is
excluded by a warm-up pass.

Usage: python benchmarks/bench_backends.py [--repeat N] [--big]
"""

import argparse
import time

import numpy as np

from scatfact import kernels


def timed(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3, help="best-of-N timing")
    ap.add_argument(
        "--big", action="store_true",
        help="include the largest acceptance case (3^22 words, merged only)",
    )
    args = ap.parse_args()

    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)}")
    for name in backends:
        kernels.warm_up(name)

    jobs = [
        ("plain sweep_max", dict(sigma=3, iota=1, k=3, max_len=11), "plain"),
        ("plain sweep_max", dict(sigma=2, iota=2, k=5, max_len=15), "plain"),
        ("merged sweep_max", dict(sigma=3, iota=2, k=4, max_len=16), "merged"),
    ]
    if args.big:
        jobs.append(("merged sweep_max", dict(sigma=3, iota=2, k=5, max_len=22), "merged"))

    header = f"{'job':<18} {'params':<34} " + " ".join(f"{b:>10}" for b in backends)
    print(header)
    print("-" * len(header))
    for label, params, method in jobs:
        times = {}
        results = {}
        for backend in backends:
            times[backend], results[backend] = timed(
                lambda: kernels.sweep_max_at_k(
                    backend=backend, method=method, **params
                ),
                args.repeat,
            )
        values = list(results.values())
        for other in values[1:]:
            assert np.array_equal(values[0], other), "backends disagree"
        desc = ", ".join(f"{k}={v}" for k, v in params.items())
        row = f"{label:<18} {desc:<34} " + " ".join(
            f"{times[b]:>9.3f}s" for b in backends
        )
        print(row)

    # dominance check: every iota-word up to max_len against w_min's counts
    from scatfact import count_scatfact_all_lengths, min_scatfact_word

    wmin = min_scatfact_word(3, 2)
    ref = count_scatfact_all_lengths(wmin).counts
    times = {}
    for backend in backends:
        times[backend], _ = timed(
            lambda: kernels.sweep_dominates(3, 2, len(wmin), 10, ref, backend=backend),
            args.repeat,
        )
    desc = "sigma=3, iota=2, kmax=6, max_len=10"
    print(
        f"{'sweep_dominates':<18} {desc:<34} "
        + " ".join(f"{times[b]:>9.3f}s" for b in backends)
    )


if __name__ == "__main__":
    main()
