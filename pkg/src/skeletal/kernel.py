"""Select the flag-orbit kernel: compiled extension if built, else pure Python.

Set ``SKELETAL_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernel

if os.environ.get("SKELETAL_PURE_PYTHON"):
    _compiled = None
else:
    try:
        from . import _kernel as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKENDS = {"python": _pykernel.flag_orbit}
if _compiled is not None:
    BACKENDS["cython"] = _compiled.flag_orbit

BACKEND = "cython" if _compiled is not None else "python"
flag_orbit = BACKENDS[BACKEND]


def get_flag_orbit(backend: str | None = None):
    if backend is None:
        return flag_orbit
    try:
        return BACKENDS[backend]
    except KeyError:
        raise ValueError(f"backend {backend!r} unavailable; have {sorted(BACKENDS)}") from None
