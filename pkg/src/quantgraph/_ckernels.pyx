# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_pykernels``; same signatures and conventions."""
import numpy as np

from libc.math cimport cos, sin, fabs


cdef extern from "complex.h" nogil:
    double complex cexp(double complex)


def assemble(double[::1] ks, double[::1] half, double complex[:, ::1] cv,
             double complex[:, ::1] cd, bint regular):
    cdef Py_ssize_t nk = ks.shape[0]
    cdef Py_ssize_t n_edges = half.shape[0]
    cdef Py_ssize_t rows = cv.shape[0]
    out = np.empty((nk, rows, 2 * n_edges), dtype=np.complex128)
    cdef double complex[:, :, ::1] M = out
    cdef Py_ssize_t t, n, r, l, rt
    cdef double k, h, c, s, sk
    cdef double complex a00, a01, a10, a11, b00, b01, b10, b11, e, ei, ik
    cdef double complex vl, vr, dl, dr
    with nogil:
        for t in range(nk):
            k = ks[t]
            for n in range(n_edges):
                h = half[n]
                if regular:
                    c = cos(k * h)
                    s = sin(k * h)
                    sk = h if k == 0.0 else s / k
                    a00 = c; a01 = -sk; a10 = c; a11 = sk
                    b00 = k * s; b01 = c; b10 = k * s; b11 = -c
                else:
                    e = cexp(1j * k * h)
                    ei = cexp(-1j * k * h)
                    ik = 1j * k
                    a00 = ei; a01 = e; a10 = e; a11 = ei
                    b00 = ik * ei; b01 = -ik * e; b10 = -ik * e; b11 = ik * ei
                l = 2 * n
                rt = l + 1
                for r in range(rows):
                    vl = cv[r, l]
                    vr = cv[r, rt]
                    dl = cd[r, l]
                    dr = cd[r, rt]
                    M[t, r, l] = vl * a00 + vr * a10 - dl * b00 - dr * b10
                    M[t, r, rt] = vl * a01 + vr * a11 - dl * b01 - dr * b11
    return out


cdef inline double _l1(double complex z) nogil:
    # pivot size as in LAPACK's izamax
    return fabs(z.real) + fabs(z.imag)


def det(mats):
    """Determinants by LU with partial pivoting, one per leading index."""
    work = np.array(mats, dtype=np.complex128, order="C", copy=True)
    cdef double complex[:, :, ::1] W = work
    cdef Py_ssize_t nb = W.shape[0]
    cdef Py_ssize_t n = W.shape[1]
    out = np.empty(nb, dtype=np.complex128)
    cdef double complex[::1] D = out
    cdef Py_ssize_t b, i, j, col, piv
    cdef double best, mag
    cdef double complex d, tmp, f
    with nogil:
        for b in range(nb):
            d = 1.0
            for col in range(n):
                piv = col
                best = _l1(W[b, col, col])
                for i in range(col + 1, n):
                    mag = _l1(W[b, i, col])
                    if mag > best:
                        best = mag
                        piv = i
                if best == 0.0:
                    d = 0.0
                    break
                if piv != col:
                    for j in range(n):
                        tmp = W[b, col, j]
                        W[b, col, j] = W[b, piv, j]
                        W[b, piv, j] = tmp
                    d = -d
                d = d * W[b, col, col]
                for i in range(col + 1, n):
                    f = W[b, i, col] / W[b, col, col]
                    for j in range(col + 1, n):
                        W[b, i, j] = W[b, i, j] - f * W[b, col, j]
            D[b] = d
    return out
