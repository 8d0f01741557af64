"""Backend selection for the hot enumeration kernels.

The compiled extension is used when it imported cleanly; otherwise the
numpy fallback takes over. Set ORDSHADOW_PURE=1 to force the fallback (the
benchmark and the parity tests do this to compare both).
"""

import os

if os.environ.get("ORDSHADOW_PURE"):
    from ordshadow import _pykernels as _impl
else:
    try:
        from ordshadow import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from ordshadow import _pykernels as _impl

BACKEND = _impl.BACKEND_NAME

subset_dichotomy_scan = _impl.subset_dichotomy_scan
deficiency_scan = _impl.deficiency_scan
min_shadow_scan = _impl.min_shadow_scan
difftypes_scan = _impl.difftypes_scan
single_graph_sweep = _impl.single_graph_sweep
