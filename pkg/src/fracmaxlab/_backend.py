"""Kernel backend selection.

Hot per-cell loops have two implementations: numba ``@njit`` kernels and a
pure-numpy fallback.  The active backend is chosen once at import time from
the environment:

    FRACMAXLAB_BACKEND=numpy   force the pure-numpy path
    FRACMAXLAB_BACKEND=numba   force numba (ImportError if unavailable)

Unset, numba is used when importable.  ``FRACMAXLAB_WORKERS`` (or the CLI
``--workers`` flag) bounds the numba thread count; the numpy path is
single-threaded.
"""

import os

_ENV_BACKEND = "FRACMAXLAB_BACKEND"
_ENV_WORKERS = "FRACMAXLAB_WORKERS"


def _detect_backend() -> str:
    choice = os.environ.get(_ENV_BACKEND, "").strip().lower()
    if choice == "numpy":
        return "numpy"
    if choice == "numba":
        import numba  # noqa: F401  - fail loudly if forced but missing

        return "numba"
    if choice not in ("", "auto"):
        raise ValueError(f"unknown {_ENV_BACKEND}={choice!r}; use 'numba' or 'numpy'")
    try:
        import numba  # noqa: F401

        return "numba"
    except ImportError:
        return "numpy"


BACKEND = _detect_backend()


def active_backend() -> str:
    """Name of the kernel backend selected at import time."""
    return BACKEND


def set_workers(n: int | None) -> int:
    """Set the numba thread count; returns the effective worker count."""
    if n is None:
        env = os.environ.get(_ENV_WORKERS)
        n = int(env) if env else 0
    if BACKEND != "numba":
        return 1
    import numba

    if n and n > 0:
        n = min(n, numba.config.NUMBA_NUM_THREADS)
        numba.set_num_threads(n)
        return n
    return numba.get_num_threads()
