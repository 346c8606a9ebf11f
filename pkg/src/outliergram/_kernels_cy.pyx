# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled depth-counting kernels.

Same contract as _kernels_py: one sort per time point gives, for every
curve, the number of sample curves strictly below it; a pair covers a curve
when one member is at-or-above and the other strictly below (self pairs
always cover), so the covering count is C(n,2) - C(n-1-b, 2) - C(b, 2).
Ties collapse into runs of equal values, so tie order inside the sort never
matters.
"""

from libc.stdlib cimport malloc, free, qsort

import numpy as np


cdef struct ValIdx:
    double v
    int idx


cdef int _cmp_validx(const void* a, const void* b) noexcept nogil:
    cdef double av = (<const ValIdx*> a).v
    cdef double bv = (<const ValIdx*> b).v
    if av < bv:
        return -1
    if av > bv:
        return 1
    return 0


cdef inline double _pairs(double k) noexcept nogil:
    return k * (k - 1.0) / 2.0


def depth_counts(const double[:, ::1] values, const double[::1] weights):
    """Return (mbd, mei, cross) arrays for every curve of an n x p sample."""
    cdef Py_ssize_t n = values.shape[0]
    cdef Py_ssize_t p = values.shape[1]
    mbd_arr = np.zeros(n)
    mei_arr = np.zeros(n)
    cross_arr = np.zeros(n)
    cdef double[::1] mbd = mbd_arr
    cdef double[::1] mei = mei_arr
    cdef double[::1] cross = cross_arr

    cdef ValIdx* col = <ValIdx*> malloc(n * sizeof(ValIdx))
    if col == NULL:
        raise MemoryError()

    cdef Py_ssize_t t, i, run_start, run_end
    cdef double total = n * (n - 1.0) / 2.0
    cdef double w, below, above_or_eq, covering
    try:
        with nogil:
            for t in range(p):
                for i in range(n):
                    col[i].v = values[i, t]
                    col[i].idx = <int> i
                qsort(col, n, sizeof(ValIdx), _cmp_validx)
                w = weights[t]
                run_start = 0
                while run_start < n:
                    run_end = run_start + 1
                    while run_end < n and col[run_end].v == col[run_start].v:
                        run_end += 1
                    # every curve in the run: run_start curves strictly
                    # below, n - 1 - run_start others at-or-above
                    below = <double> run_start
                    above_or_eq = <double> (n - run_start)
                    covering = total - _pairs(above_or_eq - 1.0) - _pairs(below)
                    for i in range(run_start, run_end):
                        mbd[col[i].idx] += w * covering / total
                        mei[col[i].idx] += w * above_or_eq / n
                        cross[col[i].idx] += w * above_or_eq * above_or_eq
                    run_start = run_end
    finally:
        free(col)
    return mbd_arr, mei_arr, cross_arr


def single_depth(const double[:, ::1] others, const double[::1] curve,
                 const double[::1] weights):
    """MBD and MEI of ``curve`` within the sample ``others + [curve]``."""
    cdef Py_ssize_t m = others.shape[0]
    cdef Py_ssize_t p = others.shape[1]
    cdef Py_ssize_t n = m + 1
    cdef double total = n * (n - 1.0) / 2.0
    cdef double mbd = 0.0, mei = 0.0
    cdef Py_ssize_t t, j
    cdef double below, x, w
    with nogil:
        for t in range(p):
            x = curve[t]
            below = 0.0
            for j in range(m):
                if others[j, t] < x:
                    below += 1.0
            w = weights[t]
            mbd += w * (total - _pairs(m - below) - _pairs(below)) / total
            mei += w * (n - below) / n
    return mbd, mei
