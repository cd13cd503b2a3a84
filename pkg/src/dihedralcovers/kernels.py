"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the pure-Python
module takes over. Set ``DIHEDRALCOVERS_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import importlib
import os
from types import ModuleType

from . import _kernels_py

__all__ = ["BACKEND", "scan_orbits", "count_product_one", "get_backend", "available_backends"]


def _load_compiled() -> ModuleType | None:
    try:
        return importlib.import_module("dihedralcovers._kernels")
    except ImportError:
        return None


_compiled = _load_compiled()

if _compiled is not None and not os.environ.get("DIHEDRALCOVERS_PURE_PYTHON"):
    _active: ModuleType = _compiled
    BACKEND = "cython"
else:
    _active = _kernels_py
    BACKEND = "python"

scan_orbits = _active.scan_orbits
count_product_one = _active.count_product_one


def available_backends() -> list[str]:
    return ["cython", "python"] if _compiled is not None else ["python"]


def get_backend(name: str | None = None) -> ModuleType:
    if name is None:
        return _active
    if name == "python":
        return _kernels_py
    if name == "cython":
        if _compiled is None:
            raise ImportError("compiled kernels are not built")
        return _compiled
    raise ValueError(f"unknown backend {name!r}")
