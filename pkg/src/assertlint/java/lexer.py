"""Lexer backend selection.

Prefers the compiled Cython core when it was built; falls back to the
pure-Python implementation otherwise.  ``ASSERTLINT_PURE=1`` forces the
fallback (useful for benchmarking and debugging).
"""

from __future__ import annotations

import os

from assertlint.java import _lexer_py

if os.environ.get("ASSERTLINT_PURE"):
    _impl = _lexer_py
    BACKEND = "python"
else:
    try:
        from assertlint.java import _lexer_c as _impl  # type: ignore[no-redef]

        BACKEND = "c"
    except ImportError:
        _impl = _lexer_py
        BACKEND = "python"

tokenize = _impl.tokenize
