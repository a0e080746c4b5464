"""Backend selection for the enumeration kernels.

The compiled extension is used when it imports and the inputs fit its 64-bit
bound; otherwise the pure-Python kernel runs.  Both produce identical keys.
"""
from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from . import _pykernels

try:
    from . import _kernels as _compiled
except ImportError:  # pragma: no cover - exercised only without a compiler
    _compiled = None

HAVE_COMPILED = _compiled is not None
COMPILED_MAX_ABS = 1 << 30
# distinct keys held in one hash pass (about 400 MB of table at either width)
KEYS_PER_PASS = {1: 8_000_000, 2: 8_000_000, 3: 4_000_000}
# g is invariant under the four double transpositions of its arguments
KEY_SYMMETRY = {1: 1, 2: 4, 3: 1}

BACKENDS = ("auto", "compiled", "python")


@dataclass(frozen=True)
class KernelResult:
    distinct: int
    sum_sq: int
    total: int
    histogram: Counter | None = None


def falling(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= n - i
    return out


def tuple_space(order: int, n: int) -> int:
    """Number of ordered tuples of distinct indices the kernel visits (upper bound)."""
    return falling(n, {1: 3, 2: 4, 3: 5}[order])


def resolve_backend(backend: str, xs: Sequence[int]) -> str:
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}")
    fits = all(abs(v) <= COMPILED_MAX_ABS for v in xs)
    if backend == "compiled":
        if not HAVE_COMPILED:
            raise RuntimeError("compiled kernels are not available")
        if not fits:
            raise OverflowError("inputs exceed the compiled kernel's 2**30 bound")
        return "compiled"
    if backend == "auto":
        return "compiled" if HAVE_COMPILED and fits else "python"
    return "python"


def default_passes(order: int, n: int) -> int:
    most_keys = tuple_space(order, n) // KEY_SYMMETRY[order]
    return max(1, -(-most_keys // KEYS_PER_PASS[order]))


def enumerate_keys(
    order: int,
    xs: Sequence[int],
    *,
    want_histogram: bool = False,
    backend: str = "auto",
    passes: int | None = None,
    workers: int = 1,
) -> KernelResult:
    """Distinct keys, sum of squared multiplicities and tuple total for f/g/h (order 1/2/3).

    Compiled runs split the key space into hash passes that are independent
    and disjoint; python runs split the tuple space by leading element.  Both
    merges are exact, so results do not depend on ``passes`` or ``workers``.
    """
    xs = [int(v) for v in xs]
    which = resolve_backend(backend, xs)
    if which == "python":
        return _python_enumerate(order, xs, want_histogram, workers)
    if passes is None:
        passes = default_passes(order, len(xs))

    def one(p: int):
        return _compiled.run_pass(order, xs, passes, p, want_histogram)

    if workers > 1 and passes > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(one, range(passes)))
    else:
        parts = [one(p) for p in range(passes)]
    hist = None
    if want_histogram:
        hist = Counter()
        for _, _, _, keys, counts in parts:
            for row, c in zip(keys.tolist(), counts.tolist()):
                hist[tuple(row)] = c
    return KernelResult(
        distinct=sum(p[0] for p in parts),
        sum_sq=sum(p[1] for p in parts),
        total=sum(p[2] for p in parts),
        histogram=hist,
    )


def _python_enumerate(order: int, xs: list[int], want_histogram: bool, workers: int) -> KernelResult:
    n = len(xs)
    if workers > 1 and n > 1:
        chunks = [range(w, n, workers) for w in range(workers)]
        with ThreadPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(lambda ch: _pykernels.lead_histogram(order, xs, ch), chunks))
        hist: Counter = Counter()
        for part in parts:
            hist.update(part)
    else:
        hist = _pykernels.lead_histogram(order, xs)
    return KernelResult(
        distinct=len(hist),
        sum_sq=sum(m * m for m in hist.values()),
        total=sum(hist.values()),
        histogram=hist if want_histogram else None,
    )
