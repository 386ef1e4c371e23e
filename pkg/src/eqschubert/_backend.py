"""Kernel selection.

The compiled kernels are used when they import cleanly; setting
EQSCHUBERT_PURE_PYTHON=1 forces the pure-Python ones.  Calls that
overflow int64 inside the compiled kernels are retried in Python.
"""
import os

from . import _kernels_py

try:
    if os.environ.get("EQSCHUBERT_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure Python requested")
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

BACKEND = "python"
_impl = _kernels_py


def current():
    return BACKEND


def available():
    return ["python"] + (["cython"] if _compiled is not None else [])


def set_backend(name):
    """Switch kernels at runtime; used by the benchmark and tests."""
    global BACKEND, _impl
    if name == "cython":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not built")
        _impl = _compiled
    elif name == "python":
        _impl = _kernels_py
    else:
        raise ValueError(f"unknown backend {name!r}")
    BACKEND = name


if _compiled is not None:
    set_backend("cython")


def mul(a, b):
    if _impl is not _kernels_py:
        try:
            return _impl.mul(a, b)
        except OverflowError:
            pass
    return _kernels_py.mul(a, b)


def divexact(a, b, width, nfields):
    if _impl is not _kernels_py:
        try:
            return _impl.divexact(a, b, width, nfields)
        except OverflowError:
            pass
    return _kernels_py.divexact(a, b, width, nfields)
