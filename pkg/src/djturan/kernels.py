"""Backend selection for the cycle kernels.

The compiled extension is preferred when importable; the pure-Python
module is the fallback.  Set DJTURAN_BACKEND=python (or =cython) to
force a choice at import time; tests and the benchmark address the
backends explicitly via get_backend().
"""

import os

from . import _kernels_py
from .errors import ParameterError

try:
    from . import _cycle_kernels
except ImportError:
    _cycle_kernels = None

_BACKENDS = {"python": _kernels_py}
if _cycle_kernels is not None:
    _BACKENDS["cython"] = _cycle_kernels


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def get_backend(name: str | None = None):
    if name is None:
        name = os.environ.get("DJTURAN_BACKEND")
    if name is None:
        return _BACKENDS.get("cython", _kernels_py)
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ParameterError(
            f"unknown kernel backend {name!r}; available: {available_backends()}"
        ) from None


#: backend chosen at import time; ops look this up through the module so
#: tests may rebind it.
active = get_backend()
