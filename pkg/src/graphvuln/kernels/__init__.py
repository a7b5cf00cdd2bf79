"""Backend dispatch for the BFS kernels.

The default backend is the numba JIT one when numba imports cleanly, with a
pure-numpy fallback otherwise. Set ``GRAPHVULN_BACKEND=numpy`` (or
``numba``) to force a backend; anything else is rejected at import. Both
backends implement the same integer contracts, so switching never changes
results, only speed.
"""

import os
from contextlib import contextmanager

from . import numpy_backend

_ENV_VAR = "GRAPHVULN_BACKEND"

try:
    from . import numba_backend

    HAVE_NUMBA = True
except ImportError:
    numba_backend = None
    HAVE_NUMBA = False

NO_CYCLE = numpy_backend.NO_CYCLE

_BACKENDS = {"numpy": numpy_backend}
if HAVE_NUMBA:
    _BACKENDS["numba"] = numba_backend


def _initial_backend():
    requested = os.environ.get(_ENV_VAR, "auto").strip().lower() or "auto"
    if requested == "auto":
        return "numba" if HAVE_NUMBA else "numpy"
    if requested not in _BACKENDS:
        raise ValueError(
            f"{_ENV_VAR}={requested!r} not recognized "
            f"(expected auto, numpy or numba)"
        )
    return requested


_active = _initial_backend()


def active_backend():
    """Name of the backend currently answering kernel calls."""
    return _active


def available_backends():
    return tuple(sorted(_BACKENDS))


def set_backend(name):
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"unknown kernel backend {name!r}; have {available_backends()}")
    _active = name


@contextmanager
def use_backend(name):
    previous = _active
    set_backend(name)
    try:
        yield
    finally:
        set_backend(previous)


def warmup():
    """Pre-compile the active backend so first-call timings are clean."""
    _BACKENDS[_active].warmup()


def sssp(indptr, indices, n, source):
    return _BACKENDS[_active].sssp(indptr, indices, n, source)


def distance_stats(indptr, indices, n):
    return _BACKENDS[_active].distance_stats(indptr, indices, n)


def component_count(indptr, indices, n):
    return int(_BACKENDS[_active].component_count(indptr, indices, n))


def girth_scan(indptr, indices, n):
    return int(_BACKENDS[_active].girth_scan(indptr, indices, n))
