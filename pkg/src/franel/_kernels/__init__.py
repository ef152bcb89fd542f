"""Hot loops behind the integrator and the lattice sums.

The compiled GMP module is used when it was built; otherwise the
pure-Python twin is loaded. Setting ``FRANEL_PURE_PYTHON=1`` forces the
fallback.
"""

import os

from . import _pykernels

try:
    if os.environ.get("FRANEL_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure Python kernels requested")
    from . import _ckernels as _impl

    BACKEND = "cython"
except ImportError:
    _impl = _pykernels
    BACKEND = "python"

cell_sum = _impl.cell_sum
lattice_numerator = _impl.lattice_numerator


def backends():
    """Map backend name to module, for cross-checks and benchmarks."""
    found = {"python": _pykernels}
    try:
        from . import _ckernels

        found["cython"] = _ckernels
    except ImportError:
        pass
    return found
