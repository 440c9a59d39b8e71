"""Pure numpy implementation of the hot kernels (fallback for ``_ckernels``).

Conventions shared with the Cython version:

* ``half`` holds the half-lengths ``l/2`` of the edges.
* ``cv`` and ``cd`` are the stacked vertex blocks ``i(S - I)`` and ``(S + I)``,
  rows by vertex, columns by endpoint (0-based, left end of edge n at 2n).
* Columns of the assembled matrix are edge coefficients, two per edge:
  ``(c+, c-)`` of ``exp(+ikx), exp(-ikx)`` for the exponential basis, or
  ``(p, q)`` of ``cos(kx), sin(kx)/k`` for the regular basis, which reduces to
  ``{1, x}`` at ``k = 0``.
"""
import numpy as np


def edge_blocks(ks, half, regular):
    """Trace blocks A (values) and B (inward derivatives), shape (nk, N, 2, 2)."""
    k = np.asarray(ks, dtype=float)[:, None]
    h = np.asarray(half, dtype=float)[None, :]
    shape = (k.shape[0], h.shape[1], 2, 2)
    A = np.empty(shape, dtype=complex)
    B = np.empty(shape, dtype=complex)
    if regular:
        kh = k * h
        c = np.cos(kh)
        s = np.sin(kh)
        with np.errstate(invalid="ignore", divide="ignore"):
            sk = np.where(k == 0.0, h, s / np.where(k == 0.0, 1.0, k))
        A[..., 0, 0] = c
        A[..., 0, 1] = -sk
        A[..., 1, 0] = c
        A[..., 1, 1] = sk
        B[..., 0, 0] = k * s
        B[..., 0, 1] = c
        B[..., 1, 0] = k * s
        B[..., 1, 1] = -c
    else:
        e = np.exp(1j * k * h)
        ei = np.exp(-1j * k * h)
        A[..., 0, 0] = ei
        A[..., 0, 1] = e
        A[..., 1, 0] = e
        A[..., 1, 1] = ei
        ik = 1j * k
        B[..., 0, 0] = ik * ei
        B[..., 0, 1] = -ik * e
        B[..., 1, 0] = -ik * e
        B[..., 1, 1] = ik * ei
    return A, B


def assemble(ks, half, cv, cd, regular):
    """Batch of secular matrices M(k) = cv A(k) - cd B(k), shape (nk, 2N, 2N)."""
    A, B = edge_blocks(ks, half, regular)
    n_edges = A.shape[1]
    rows = cv.shape[0]
    cv3 = np.asarray(cv).reshape(rows, n_edges, 2)
    cd3 = np.asarray(cd).reshape(rows, n_edges, 2)
    M = np.einsum("rne,kneb->krnb", cv3, A) - np.einsum("rne,kneb->krnb", cd3, B)
    return M.reshape(len(A), rows, 2 * n_edges)


def det(mats):
    return np.linalg.det(np.asarray(mats, dtype=complex))
