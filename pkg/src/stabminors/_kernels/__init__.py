"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it imports and the
environment variable ``STABMINORS_PURE_PYTHON`` is unset or ``0``. Otherwise
the numpy/pure-Python ``_pykernels`` module is used. Both expose the same
functions; the wrappers below also route ``n > 6`` (minor vectors wider
than a machine word) to the Python implementation.
"""

from __future__ import annotations

import os
from types import ModuleType

import numpy as np

from . import _pykernels
from ._masks import MAX_KERNEL_N, lagrangian_count

_ckernels: ModuleType | None
try:
    from . import _ckernels  # type: ignore[attr-defined]
except ImportError:  # extension not built
    _ckernels = None


def _select() -> ModuleType:
    if os.environ.get("STABMINORS_PURE_PYTHON", "0") not in ("", "0") or _ckernels is None:
        return _pykernels
    return _ckernels


_impl = _select()
BACKEND: str = _impl.BACKEND


def available_backends() -> list[str]:
    out = ["python"]
    if _ckernels is not None:
        out.insert(0, "cython")
    return out


def get_backend(name: str) -> "Kernels":
    if name == "python":
        return Kernels(_pykernels)
    if name == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not built")
        return Kernels(_ckernels)
    raise ValueError(f"unknown backend {name!r}")


class Kernels:
    """Uniform facade over one backend module."""

    def __init__(self, module: ModuleType):
        self.module = module
        self.name = module.BACKEND

    def minor_bits(self, cols, n: int) -> int:
        if n > MAX_KERNEL_N or n < 1:
            return _pykernels.minor_bits(cols, n)
        return self.module.minor_bits(cols, n)

    def chart_points(self, n: int, loops: bool = True) -> np.ndarray:
        return self.module.chart_points(n, loops)

    def orbit_bfs(self, start: int, n: int):
        if n > MAX_KERNEL_N or self.module is _pykernels:
            return _pykernels.orbit_bfs(start, n)
        return self.module.orbit_bfs(start, n, lagrangian_count(n) + 1)

    def partition(self, n: int, seeds: np.ndarray):
        if self.module is _pykernels:
            return _pykernels.partition(n, seeds)
        return self.module.partition(n, seeds, lagrangian_count(n))


active = Kernels(_impl)

minor_bits = active.minor_bits
chart_points = active.chart_points
orbit_bfs = active.orbit_bfs
partition = active.partition
