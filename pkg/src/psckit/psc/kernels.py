"""Kernel backend selection.

Prefers the compiled extension, falls back to the pure-Python kernels.
Set PSCKIT_PURE_PYTHON=1 to force the fallback (used by the benchmark
and by tests that exercise both backends).
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("PSCKIT_PURE_PYTHON") == "1":
    _impl = _pykernels
else:
    try:
        from psckit import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykernels

BACKEND: str = _impl.BACKEND
span_mean = _impl.span_mean
span_median = _impl.span_median
span_relative = _impl.span_relative
