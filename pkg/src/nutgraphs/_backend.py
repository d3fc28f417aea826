"""Select the compiled kernels when available, else the pure-Python ones.

Set ``NUTGRAPHS_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _pykernels

_impl = _pykernels
if not os.environ.get("NUTGRAPHS_PURE_PYTHON"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        pass

BACKEND = "python" if _impl is _pykernels else "cython"
MAX_COMPILED_ORDER = 64


def _pick(n: int):
    return _impl if n <= MAX_COMPILED_ORDER else _pykernels


def expand(n, adj, k, stop, lo, hi, connected):
    return _pick(n).expand(n, adj, k, stop, lo, hi, connected)


def is_canonical(n, adj, known):
    return _pick(n).is_canonical(n, adj, known)


def nullity_mod_p(n, adj):
    return _pick(n).nullity_mod_p(n, adj)
