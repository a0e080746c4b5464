# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled enumeration kernels for cross-ratio image sets and energies.

Inputs are int64 arrays with |x| <= 2**30, so every product of two
differences fits in a signed 64-bit word.  Keys are reduced fractions
(num, den) with den > 0; the h kernel uses pairs of them.
"""
import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t

cnp.import_array()

MAX_ABS = 1 << 30

cdef extern from "_keytable.h" namespace "xratio" nogil:
    cdef cppclass KeyTable:
        KeyTable(int width)
        bint add(const int64_t* key)
        int64_t size()
        int64_t sum_sq()
        int64_t total()
        void dump(int64_t* out_keys, int64_t* out_counts)
    int64_t key_pass(const int64_t* k, int w, int64_t passes)
    void reduce_frac(int64_t num, int64_t den, int64_t* out)


cdef inline void _xr_key(int64_t a, int64_t b, int64_t c, int64_t d, int64_t* out) noexcept nogil:
    reduce_frac((a - b) * (c - d), (b - c) * (a - d), out)


cdef void _fill_f(KeyTable* tab, const int64_t* x, Py_ssize_t n,
                  int64_t passes, int64_t pidx) noexcept nogil:
    cdef Py_ssize_t i, j, k
    cdef int64_t key[2]
    for i in range(n):
        if x[i] == 0:
            continue
        for j in range(n):
            if j == i or x[j] == 0:
                continue
            for k in range(n):
                if k == i or k == j or x[k] == 0:
                    continue
                _xr_key(0, x[i], x[j], x[k], key)
                if passes > 1 and key_pass(key, 2, passes) != pidx:
                    continue
                tab.add(key)


cdef void _fill_g(KeyTable* tab, const int64_t* x, Py_ssize_t n,
                  int64_t passes, int64_t pidx) noexcept nogil:
    cdef Py_ssize_t i, j, k, l
    cdef int64_t key[2]
    for i in range(n):
        for j in range(n):
            if j == i:
                continue
            for k in range(n):
                if k == i or k == j:
                    continue
                for l in range(n):
                    if l == i or l == j or l == k:
                        continue
                    _xr_key(x[i], x[j], x[k], x[l], key)
                    if passes > 1 and key_pass(key, 2, passes) != pidx:
                        continue
                    tab.add(key)


cdef void _fill_h(KeyTable* tab, const int64_t* x, Py_ssize_t n, int64_t* inner,
                  int64_t passes, int64_t pidx) noexcept nogil:
    # inner: scratch of 2*n words holding X(x_i, x_j, x_k, x_l) for every l
    cdef Py_ssize_t i, j, k, l, m
    cdef int64_t key[4]
    for i in range(n):
        for j in range(n):
            if j == i:
                continue
            for k in range(n):
                if k == i or k == j:
                    continue
                for l in range(n):
                    if l != i and l != j and l != k:
                        _xr_key(x[i], x[j], x[k], x[l], inner + 2 * l)
                for l in range(n):
                    if l == i or l == j or l == k:
                        continue
                    for m in range(n):
                        if m == i or m == j or m == k or m == l:
                            continue
                        key[0] = inner[2 * l]
                        key[1] = inner[2 * l + 1]
                        key[2] = inner[2 * m]
                        key[3] = inner[2 * m + 1]
                        if passes > 1 and key_pass(key, 4, passes) != pidx:
                            continue
                        tab.add(key)


def run_pass(int order, xs, int64_t passes=1, int64_t pass_index=0, bint want_keys=False):
    """Enumerate one hash partition of the tuple space.

    ``order`` is 1, 2, 3 for f, g, h.  Returns ``(distinct, sum_sq, total,
    keys, counts)`` where ``keys``/``counts`` are arrays only when requested.
    """
    cdef cnp.ndarray[int64_t, ndim=1, mode="c"] arr = np.ascontiguousarray(xs, dtype=np.int64)
    cdef Py_ssize_t n = arr.shape[0]
    if n and int(np.abs(arr).max()) > MAX_ABS:
        raise OverflowError("kernel inputs must satisfy |x| <= 2**30")
    if order not in (1, 2, 3):
        raise ValueError("order must be 1, 2 or 3")
    if passes < 1 or not (0 <= pass_index < passes):
        raise ValueError("bad pass partition")
    cdef int width = 4 if order == 3 else 2
    cdef KeyTable* tab = new KeyTable(width)
    cdef cnp.ndarray[int64_t, ndim=1, mode="c"] scratch = np.zeros(2 * max(n, 1), dtype=np.int64)
    cdef const int64_t* xp = &arr[0] if n else NULL
    cdef int64_t distinct, ssq, tot
    cdef cnp.ndarray[int64_t, ndim=2, mode="c"] keys
    cdef cnp.ndarray[int64_t, ndim=1, mode="c"] counts
    try:
        with nogil:
            if n:
                if order == 1:
                    _fill_f(tab, xp, n, passes, pass_index)
                elif order == 2:
                    _fill_g(tab, xp, n, passes, pass_index)
                else:
                    _fill_h(tab, xp, n, &scratch[0], passes, pass_index)
            distinct = tab.size()
            ssq = tab.sum_sq()
            tot = tab.total()
        if not want_keys:
            return distinct, ssq, tot, None, None
        keys = np.empty((distinct, width), dtype=np.int64)
        counts = np.empty(distinct, dtype=np.int64)
        if distinct:
            tab.dump(&keys[0, 0], &counts[0])
        return distinct, ssq, tot, keys, counts
    finally:
        del tab
