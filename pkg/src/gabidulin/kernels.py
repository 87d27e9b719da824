"""Backend selection for the arithmetic kernels.

The compiled ``_ckernels`` extension is used when it has been built;
otherwise the pure-Python ``_pykernels`` module takes over.  Set
``GABIDULIN_KERNELS=python`` to force the fallback.
"""

import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    _BACKENDS["cython"] = _ckernels


def available_backends():
    return sorted(_BACKENDS)


def get_backend(name=None):
    """Return the kernel module called ``name`` (default: the active one)."""
    if name is None:
        return default
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(
            f"unknown or unavailable kernel backend {name!r}; "
            f"available: {', '.join(available_backends())}"
        ) from None


def _select():
    forced = os.environ.get("GABIDULIN_KERNELS", "").strip().lower()
    if forced:
        return get_backend(forced)
    return _ckernels if _ckernels is not None else _pykernels


default = _select()
BACKEND = default.BACKEND
