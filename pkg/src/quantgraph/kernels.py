"""Kernel dispatch: compiled ``_ckernels`` when importable, numpy fallback otherwise.

Set ``QUANTGRAPH_PURE_PYTHON=1`` to force the fallback.
"""
import os

import numpy as np

from . import _pykernels

BACKEND = "python"
_impl = _pykernels
if not os.environ.get("QUANTGRAPH_PURE_PYTHON"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels


def assemble(ks, half, cv, cd, regular=False):
    ks = np.ascontiguousarray(np.atleast_1d(ks), dtype=float)
    half = np.ascontiguousarray(half, dtype=float)
    cv = np.ascontiguousarray(cv, dtype=complex)
    cd = np.ascontiguousarray(cd, dtype=complex)
    return _impl.assemble(ks, half, cv, cd, bool(regular))


def det(mats):
    mats = np.ascontiguousarray(mats, dtype=complex)
    if mats.ndim == 2:
        return _impl.det(mats[None])[0]
    return _impl.det(mats)
