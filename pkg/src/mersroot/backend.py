"""Kernel backend selection.

The hot enumeration loops (unit scans, circulant sweeps, matching parity,
small group-algebra checks) exist twice: a compiled extension built from
``_speedups.pyx`` and a pure-Python/numpy fallback in ``_purekernels``.
The compiled module is preferred when the build produced it; callers can
force a choice for benchmarking or cross-checking.
"""

from __future__ import annotations

import contextlib
import os

from . import _purekernels

try:
    from . import _speedups
except ImportError:  # extension not built; fall back silently
    _speedups = None

_BACKENDS = {"pure": _purekernels}
if _speedups is not None:
    _BACKENDS["compiled"] = _speedups

_active_name = "compiled" if _speedups is not None else "pure"
_requested = os.environ.get("MERSROOT_BACKEND")
if _requested:
    if _requested not in _BACKENDS:
        raise ImportError(
            f"MERSROOT_BACKEND={_requested!r} is not available; built backends: {tuple(_BACKENDS)}"
        )
    _active_name = _requested


def kernels():
    """The currently selected kernel module."""
    return _BACKENDS[_active_name]


def backend_name() -> str:
    return _active_name


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def get_backend(name: str):
    """A specific kernel module ("pure" or "compiled")."""
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown backend {name!r}; available: {available_backends()}") from None


def use(name: str) -> None:
    """Select the active backend by name."""
    global _active_name
    if name not in _BACKENDS:
        raise ValueError(f"unknown backend {name!r}; available: {available_backends()}")
    _active_name = name


@contextlib.contextmanager
def forced(name: str):
    """Temporarily force a backend (used by tests and benchmarks)."""
    previous = _active_name
    use(name)
    try:
        yield kernels()
    finally:
        use(previous)
