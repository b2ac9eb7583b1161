"""JIT selection for the bit-parallel kernels.

Kernels are written once in a numba-compatible subset of Python/numpy. When
numba is importable and ``CLAWPERF_NO_JIT`` is unset (or ``0``), they are
compiled with ``numba.njit``; otherwise the very same functions run as plain
Python on numpy scalars. The fallback is slow but exact and is exercised by
the test-suite on small inputs.
"""

import os

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None


def _flag(name):
    return os.environ.get(name, "").strip().lower() not in ("", "0", "false", "no")


JIT_ENABLED = numba is not None and not _flag("CLAWPERF_NO_JIT")


def njit(fn):
    if JIT_ENABLED:
        return numba.njit(cache=True, nogil=True)(fn)
    return fn
