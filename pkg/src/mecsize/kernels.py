"""Kernel selection: compiled extension when available, pure Python otherwise.

Set MECSIZE_PURE_PYTHON=1 to force the pure-Python kernels, or call
`use("python"|"cython")` to switch at runtime (the counting engine resolves
the active module when a computation starts, so switching affects
subsequent calls only). `bench --impl both` relies on this to compare the
two implementations in one process.
"""

import os

from . import _kernels_py

_cy = None
try:
    from . import _kernels_cy as _cy  # type: ignore[no-redef]
except ImportError:
    _cy = None

if os.environ.get("MECSIZE_PURE_PYTHON"):
    active = _kernels_py
else:
    active = _cy if _cy is not None else _kernels_py


def available():
    """Names of the kernel implementations importable in this process."""
    names = ["python"]
    if _cy is not None:
        names.append("cython")
    return names


def get(name):
    if name in ("python", "py"):
        return _kernels_py
    if name in ("cython", "ext", "cy"):
        if _cy is None:
            raise RuntimeError("compiled kernels are not available in this build")
        return _cy
    raise ValueError(f"unknown kernel implementation {name!r}")


def use(name):
    """Select the kernel implementation for subsequent computations."""
    global active
    active = get(name)
    return active
