"""Picks the kernel implementation at import time.

The compiled module is used when it imports; ``TOTCOAL_BACKEND=python``
forces the pure-Python kernels.
"""

from __future__ import annotations

import importlib
import os
from types import ModuleType

from . import _pykernels


def load(name: str) -> ModuleType:
    """Return the kernel module for ``"cython"`` or ``"python"``."""
    if name == "python":
        return _pykernels
    if name == "cython":
        return importlib.import_module("totcoal._ckernels")
    raise ValueError(f"unknown backend {name!r}")


def available() -> list[str]:
    names = ["python"]
    try:
        load("cython")
    except ImportError:
        pass
    else:
        names.insert(0, "cython")
    return names


def _select() -> tuple[str, ModuleType]:
    wanted = os.environ.get("TOTCOAL_BACKEND", "").strip().lower()
    if wanted == "python":
        return "python", _pykernels
    try:
        return "cython", load("cython")
    except ImportError:
        if wanted == "cython":
            raise
        return "python", _pykernels


BACKEND, kernels = _select()
