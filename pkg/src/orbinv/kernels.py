"""Backend selection for the hot kernels.

The compiled module ``_ckernels`` is used when it imports; otherwise, or when
``ORBINV_PURE_PYTHON`` is set to a non-empty value other than ``0``, the
pure-Python twin is used.  Both expose identical functions.
"""

import importlib
import os

from . import _pykernels


def load(name: str = "auto"):
    """Return a kernel module: ``"cython"``, ``"python"`` or ``"auto"``."""
    if name == "python":
        return _pykernels
    if name == "cython":
        return importlib.import_module("orbinv._ckernels")
    if name != "auto":
        raise ValueError(f"unknown kernel backend {name!r}")
    forced = os.environ.get("ORBINV_PURE_PYTHON", "")
    if forced and forced != "0":
        return _pykernels
    try:
        return importlib.import_module("orbinv._ckernels")
    except ImportError:
        return _pykernels


def available() -> list[str]:
    names = ["python"]
    try:
        load("cython")
    except ImportError:
        pass
    else:
        names.insert(0, "cython")
    return names


kernels = load()
BACKEND = kernels.BACKEND
