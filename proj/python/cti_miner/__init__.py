"""Python bindings for the cti-miner pipeline.

The compiled extension lives at ``cti_miner._core`` when installed; during
in-tree testing it is picked up from the CMake build directory via
``PYTHONPATH``.
"""

try:
    from cti_miner._core import *  # noqa: F401,F403
    from cti_miner._core import __version__  # noqa: F401
except ImportError:  # pragma: no cover - in-tree layout
    from _core import *  # noqa: F401,F403
    from _core import __version__  # noqa: F401
