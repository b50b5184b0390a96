"""Matching kernels: compiled extension when available, pure Python otherwise.

``BACKEND`` names the implementation actually selected at import time.  Both
twins expose ``max_matching(n, edges) -> (size, mate)`` on 0-based vertices
and must agree exactly; the test suite and benchmarks diff them directly.
"""

from __future__ import annotations

from . import _pure

try:
    from . import _blossom as _impl  # type: ignore[attr-defined]
except ImportError:
    _impl = _pure

max_matching = _impl.max_matching
BACKEND: str = _impl.BACKEND

__all__ = ["max_matching", "BACKEND"]
