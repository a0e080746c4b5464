"""Pure-Python enumeration kernels; same contract as the compiled ``_kernels``.

Arbitrary-precision ints, so there is no bound on the inputs.  Work can be
split by the index of the leading tuple element (``leads``); partial
histograms from disjoint lead sets merge by Counter addition.
"""
from __future__ import annotations

from collections import Counter
from math import gcd
from typing import Iterable, Sequence


def _key(a: int, b: int, c: int, d: int) -> tuple[int, int]:
    num = (a - b) * (c - d)
    den = (b - c) * (a - d)
    g = gcd(num, den)
    if den < 0:
        g = -g
    return (num // g, den // g)


def lead_histogram(order: int, xs: Sequence[int], leads: Iterable[int] | None = None) -> Counter:
    """Multiplicity of every key over valid tuples whose first index is in ``leads``."""
    n = len(xs)
    hist: Counter = Counter()
    rng = range(n)
    lead_idx = rng if leads is None else leads
    if order == 1:
        for i in lead_idx:
            a = xs[i]
            if a == 0:
                continue
            for j in rng:
                b = xs[j]
                if j == i or b == 0:
                    continue
                for k in rng:
                    c = xs[k]
                    if k == i or k == j or c == 0:
                        continue
                    hist[_key(0, a, b, c)] += 1
    elif order == 2:
        for i in lead_idx:
            a = xs[i]
            for j in rng:
                if j == i:
                    continue
                b = xs[j]
                for k in rng:
                    if k == i or k == j:
                        continue
                    c = xs[k]
                    for l in rng:
                        if l == i or l == j or l == k:
                            continue
                        hist[_key(a, b, c, xs[l])] += 1
    elif order == 3:
        for i in lead_idx:
            a = xs[i]
            for j in rng:
                if j == i:
                    continue
                b = xs[j]
                for k in rng:
                    if k == i or k == j:
                        continue
                    c = xs[k]
                    rest = [l for l in rng if l != i and l != j and l != k]
                    inner = {l: _key(a, b, c, xs[l]) for l in rest}
                    for l in rest:
                        kl = inner[l]
                        for m in rest:
                            if m != l:
                                hist[kl + inner[m]] += 1
    else:
        raise ValueError("order must be 1, 2 or 3")
    return hist


def run_pass(order: int, xs, passes: int = 1, pass_index: int = 0, want_keys: bool = False):
    """Mirror of the compiled ``run_pass``; keys come back as a list of tuples."""
    if passes < 1 or not (0 <= pass_index < passes):
        raise ValueError("bad pass partition")
    hist = lead_histogram(order, [int(v) for v in xs])
    if passes > 1:
        hist = Counter({k: m for k, m in hist.items() if hash(k) % passes == pass_index})
    ssq = sum(m * m for m in hist.values())
    tot = sum(hist.values())
    if not want_keys:
        return len(hist), ssq, tot, None, None
    keys = list(hist)
    return len(hist), ssq, tot, keys, [hist[k] for k in keys]
