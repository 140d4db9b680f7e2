# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled span-aggregation kernels.

Must agree bit-for-bit with psckit.psc._pykernels on the same inputs:
same accumulation order, same even-length median rule.
"""

from libc.stdlib cimport free, malloc

BACKEND = "compiled"


cdef int _cmp_double(const void *a, const void *b) noexcept nogil:
    cdef double x = (<const double *> a)[0]
    cdef double y = (<const double *> b)[0]
    if x < y:
        return -1
    if x > y:
        return 1
    return 0


cdef extern from "stdlib.h":
    void qsort(void *base, size_t nmemb, size_t size,
               int (*compar)(const void *, const void *)) nogil


def span_mean(double[::1] probs, Py_ssize_t i, Py_ssize_t j):
    cdef double total = 0.0
    cdef Py_ssize_t k
    for k in range(i, j + 1):
        total += probs[k]
    return total / <double> (j - i + 1)


def span_median(double[::1] probs, Py_ssize_t i, Py_ssize_t j):
    cdef Py_ssize_t n = j - i + 1
    cdef Py_ssize_t k, mid
    cdef double result
    cdef double *window = <double *> malloc(n * sizeof(double))
    if window == NULL:
        raise MemoryError()
    try:
        for k in range(n):
            window[k] = probs[i + k]
        qsort(window, <size_t> n, sizeof(double), _cmp_double)
        mid = n // 2
        if n % 2:
            result = window[mid]
        else:
            result = (window[mid - 1] + window[mid]) / 2.0
    finally:
        free(window)
    return result


def span_relative(double[::1] probs, Py_ssize_t i, Py_ssize_t j,
                  double[::1] p_min, double[::1] p_max, double epsilon):
    cdef double total = 0.0
    cdef Py_ssize_t k, n = j - i + 1
    for k in range(n):
        total += (probs[i + k] - p_min[k]) / (p_max[k] - p_min[k] + epsilon)
    return total / <double> n
