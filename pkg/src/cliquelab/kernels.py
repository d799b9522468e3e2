"""Kernel selection: compiled extension if available, pure Python otherwise.

Set ``CLIQUE_LAB_PURE=1`` to force the pure-Python kernels.
"""

from __future__ import annotations

import os

from . import _pykernels

if os.environ.get("CLIQUE_LAB_PURE"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykernels

IMPL_NAME: str = _impl.IMPL_NAME

maximal_cliques = _impl.maximal_cliques
count_maximal_cliques = _impl.count_maximal_cliques
canonical_cert = _impl.canonical_cert
