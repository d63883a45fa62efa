"""Kernel backend selection.

The compiled extension is preferred; the pure-Python module is a drop-in
fallback.  Set POLYHERGLOTZ_BACKEND=python to force the fallback (used by
the benchmark and the backend-parity tests).
"""

from __future__ import annotations

import os

from . import _purekernels


def _select():
    if os.environ.get("POLYHERGLOTZ_BACKEND", "").lower() == "python":
        return _purekernels
    try:
        from . import _fastkernels  # compiled at install time

        return _fastkernels
    except ImportError:
        return _purekernels


impl = _select()


def backend_name() -> str:
    return impl.BACKEND


def get_backend(name: str | None = None):
    """Return a backend module by name ("compiled" / "python" / None=current)."""
    if name is None:
        return impl
    if name == "python":
        return _purekernels
    if name == "compiled":
        from . import _fastkernels

        return _fastkernels
    raise ValueError(f"unknown backend {name!r}")
