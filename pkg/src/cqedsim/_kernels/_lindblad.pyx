# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled evaluation of the master-equation right-hand side.

Chains BLAS zgemm calls without intermediate Python dispatch. Arrays are
row-major; products are issued as C^T = B^T A^T against the column-major
BLAS interface.
"""

import numpy as np

cimport numpy as cnp
from scipy.linalg.cython_blas cimport zgemm

cnp.import_array()


cdef void _gemm(double complex alpha, double complex[:, ::1] a,
                double complex[:, ::1] b, double complex beta,
                double complex[:, ::1] c) noexcept nogil:
    cdef int m = <int> a.shape[0]
    cdef int k = <int> a.shape[1]
    cdef int n = <int> b.shape[1]
    zgemm("N", "N", &n, &m, &k, &alpha, &b[0, 0], &n, &a[0, 0], &k,
          &beta, &c[0, 0], &n)


def rhs(double complex[:, ::1] E, double complex[:, ::1] Ed,
        double complex[:, :, ::1] Ls, double complex[:, :, ::1] Lsd,
        double complex[:, ::1] rho, double complex[:, ::1] out,
        double complex[:, ::1] scratch):
    """out = E rho + rho Ed + sum_n Ls[n] rho Lsd[n]."""
    cdef Py_ssize_t n
    cdef double complex one = 1.0
    cdef double complex zero = 0.0
    with nogil:
        _gemm(one, E, rho, zero, out)
        _gemm(one, rho, Ed, one, out)
        for n in range(Ls.shape[0]):
            _gemm(one, Ls[n], rho, zero, scratch)
            _gemm(one, scratch, Lsd[n], one, out)
