"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--search-p 7 9] [--hook-p 13 23 43] [--repeat 3]
"""
import argparse
import time

from pcore._backend import BACKENDS, get_kernels
from pcore.walk import largest_partition


def best_time(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--search-p", type=int, nargs="+", default=[5, 7])
    ap.add_argument("--hook-p", type=int, nargs="+", default=[13, 23, 43])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = sorted(BACKENDS)
    print(f"backends: {', '.join(backends)}")
    print(f"{'kernel':<22}{'p':>4}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")

    cases = [("search_walks", p, lambda k, p=p: k.search_walks(p)) for p in args.search_p]
    for p in args.hook_p:
        beta = largest_partition(p).partition.beta_numbers()
        cases.append(("first_hook_multiple", p, lambda k, beta=beta, p=p: k.first_hook_multiple(beta, p)))

    for name, p, call in cases:
        timings, results = {}, []
        for b in backends:
            kern = get_kernels(b)
            timings[b], res = best_time(lambda: call(kern), args.repeat)
            results.append(res)
        if any(r != results[0] for r in results):
            raise SystemExit(f"{name} p={p}: backends disagree: {results}")
        row = f"{name:<22}{p:>4}" + "".join(f"{timings[b]:>11.4f}s" for b in backends)
        if len(backends) == 2:
            row += f"{timings['python'] / timings['cython']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
