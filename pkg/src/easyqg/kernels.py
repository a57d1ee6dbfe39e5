"""Backend selection for the hot loops.

The compiled module is used when it was built; otherwise, or when the
``EASYQG_PURE_PYTHON`` environment variable is set to a non-empty value,
the pure-Python reference implementation is used.
"""

import os

from . import _pykernels

BACKEND = "python"

if not os.environ.get("EASYQG_PURE_PYTHON"):
    try:
        from . import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pykernels
else:
    _impl = _pykernels

join_block_counts = _impl.join_block_counts
delta_table = _impl.delta_table
kernel_labels = _impl.kernel_labels

__all__ = ["BACKEND", "join_block_counts", "delta_table", "kernel_labels"]
