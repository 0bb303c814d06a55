"""Hot kernels, compiled when available.

The Cython extension ``_fast`` is used if it was built; otherwise, or when
``WSDALG_PURE_PYTHON=1`` is set, the pure-Python ``_pure`` module is used.
Both expose the same functions with identical results.
"""

import os

from . import _pure

_FORCE_PURE = os.environ.get("WSDALG_PURE_PYTHON", "").strip() not in ("", "0")

if _FORCE_PURE:
    _impl = _pure
else:
    try:
        from . import _fast as _impl
    except ImportError:  # extension not built
        _impl = _pure

BACKEND = _impl.BACKEND
matmul = _impl.matmul
lincomb = _impl.lincomb
content = _impl.content
divide = _impl.divide
primitive = _impl.primitive
pivot = _impl.pivot
reduce = _impl.reduce


def available_backends():
    """Kernel modules importable in this environment, pure Python first."""
    out = [_pure]
    try:
        from . import _fast
    except ImportError:
        pass
    else:
        out.append(_fast)
    return out
