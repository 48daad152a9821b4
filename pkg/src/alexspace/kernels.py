"""Kernel dispatch: numba loops when enabled, numpy otherwise (see ``ALEX_NUMBA``)."""
from ._accel import USE_NUMBA

if USE_NUMBA:
    from .kernels_nb import (  # noqa: F401
        all_periodic_flags, map_topology_rows, maps_from_index, preorder_count,
        preorder_rows, row_keys, uniformizable_flags,
    )
    BACKEND = "numba"
else:
    from .kernels_np import (  # noqa: F401
        all_periodic_flags, map_topology_rows, maps_from_index, preorder_count,
        preorder_rows, row_keys, uniformizable_flags,
    )
    BACKEND = "numpy"
