import random

import numpy as np
import pytest

from xratio import _pykernels
from xratio.kernels import HAVE_COMPILED, enumerate_keys, resolve_backend, tuple_space

needs_compiled = pytest.mark.skipif(not HAVE_COMPILED, reason="compiled kernels not built")

SETS = [
    [1, 2, 3, 4, 5, 6, 7],
    [0, 1, 2, 4, 7, 11, 16],
    [-9, -4, 0, 3, 5, 13, 40, 41],
]


@needs_compiled
@pytest.mark.parametrize("order", [1, 2, 3])
@pytest.mark.parametrize("xs", SETS)
def test_backends_agree(order, xs):
    c = enumerate_keys(order, xs, want_histogram=True, backend="compiled")
    p = enumerate_keys(order, xs, want_histogram=True, backend="python")
    assert c.histogram == p.histogram
    assert (c.distinct, c.sum_sq, c.total) == (p.distinct, p.sum_sq, p.total)


@needs_compiled
@pytest.mark.parametrize("order", [1, 2, 3])
def test_hash_passes_do_not_change_results(order):
    xs = random.Random(3).sample(range(1, 1000), 9)
    ref = enumerate_keys(order, xs, want_histogram=True, backend="compiled", passes=1)
    for passes, workers in ((2, 1), (5, 1), (7, 3)):
        got = enumerate_keys(order, xs, want_histogram=True, backend="compiled", passes=passes, workers=workers)
        assert got == ref


@pytest.mark.parametrize("order", [1, 2, 3])
def test_lead_partition_merge(order):
    xs = [0, 2, 3, 5, 8, 13, 21]
    whole = _pykernels.lead_histogram(order, xs)
    rng = random.Random(order)
    idx = list(range(len(xs)))
    rng.shuffle(idx)
    merged = _pykernels.lead_histogram(order, xs, idx[:3]) + _pykernels.lead_histogram(order, xs, idx[3:])
    assert merged == whole
    assert enumerate_keys(order, xs, backend="python", workers=3) == enumerate_keys(order, xs, backend="python")


def test_python_run_pass_mirror():
    xs = [1, 2, 4, 8, 9]
    full = _pykernels.run_pass(2, xs)
    parts = [_pykernels.run_pass(2, xs, 3, p) for p in range(3)]
    assert sum(p[0] for p in parts) == full[0]
    assert sum(p[1] for p in parts) == full[1]


@needs_compiled
def test_compiled_run_pass_keys():
    from xratio import _kernels

    d, ssq, tot, keys, counts = _kernels.run_pass(1, np.array([1, 2, 3]), want_keys=True)
    assert (d, ssq, tot) == (6, 6, 6)
    assert sorted(map(tuple, keys.tolist())) == [(-4, 1), (-4, 3), (-3, 4), (-1, 4), (1, 3), (3, 1)]
    with pytest.raises(OverflowError):
        _kernels.run_pass(2, np.array([1, 2, 3, 2**31]))


def test_backend_resolution():
    assert resolve_backend("python", [1, 2]) == "python"
    assert resolve_backend("auto", [1, 2**40]) == "python"
    if HAVE_COMPILED:
        assert resolve_backend("auto", [1, 2]) == "compiled"
        with pytest.raises(OverflowError):
            resolve_backend("compiled", [2**31])


def test_totals_count_valid_tuples():
    xs = [0, 1, 5, 6, 9]
    assert enumerate_keys(1, xs).total == tuple_space(1, 4)
    assert enumerate_keys(2, xs).total == tuple_space(2, 5)
    assert enumerate_keys(3, xs).total == tuple_space(3, 5)
    assert enumerate_keys(2, []).total == 0
