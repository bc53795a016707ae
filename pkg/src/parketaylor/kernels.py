"""Hot-loop backend selection.

The compiled extension ``parketaylor._kernels`` is used when it imports;
otherwise the pure-Python module ``parketaylor._kernels_py`` is.  Setting
``PARKETAYLOR_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

BACKEND = "python"

if os.environ.get("PARKETAYLOR_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
else:
    _impl = _kernels_py

rank_mod_p = _impl.rank_mod_p
lattice_insert = _impl.lattice_insert
lattice_reduce = _impl.lattice_reduce
binomial_normal_form = _impl.binomial_normal_form

__all__ = ["BACKEND", "rank_mod_p", "lattice_insert", "lattice_reduce", "binomial_normal_form"]
