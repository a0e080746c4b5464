"""Compare the compiled and pure-Python enumeration kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import time

from xratio.kernels import HAVE_COMPILED, enumerate_keys

CASES = [(1, 16), (1, 32), (1, 64), (2, 12), (2, 24), (3, 8), (3, 12)]


def best_of(repeat, fn):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not HAVE_COMPILED:
        raise SystemExit("compiled kernels are not built; run `pip install -e . --no-build-isolation`")
    print(f"{'fn':>3} {'n':>4} {'distinct':>10} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for order, n in CASES:
        xs = list(range(1, n + 1))
        tp, rp = best_of(args.repeat, lambda: enumerate_keys(order, xs, backend="python"))
        tc, rc = best_of(args.repeat, lambda: enumerate_keys(order, xs, backend="compiled"))
        if (rp.distinct, rp.sum_sq, rp.total) != (rc.distinct, rc.sum_sq, rc.total):
            raise SystemExit(f"backends disagree on order {order}, n={n}")
        print(f"{'fgh'[order - 1]:>3} {n:>4} {rc.distinct:>10} {tp:>10.4f} {tc:>11.4f} {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
