"""Hot-kernel dispatch: compiled extension when available, numpy fallback otherwise.

Set DUALWAVE_PURE_PYTHON=1 to force the fallback (used by the benchmark and
the backend-parity tests).
"""

import os

if os.environ.get("DUALWAVE_PURE_PYTHON"):
    from . import _pyfallback as _impl

    BACKEND = "python"
else:
    try:
        from . import _core as _impl

        BACKEND = "compiled"
    except ImportError:
        from . import _pyfallback as _impl

        BACKEND = "python"

verlet = _impl.verlet
dipole_points = _impl.dipole_points
dipole_grid = _impl.dipole_grid


def get_backend(name=None):
    """Return the kernel namespace for `name` ('compiled' or 'python').

    With name=None the active backend module is returned.
    """
    if name is None:
        return _impl
    if name == "python":
        from . import _pyfallback

        return _pyfallback
    if name == "compiled":
        from . import _core

        return _core
    raise ValueError(f"unknown backend {name!r}")
