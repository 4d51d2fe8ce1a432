"""Center-outward q-dominance: grids, transport maps, dominance sorting,
sample-size thresholds, and the stochastic NSGA-II benchmark harness."""

try:
    from qdom._qdom import *  # noqa: F401,F403  (installed layout)
    from qdom import _qdom as _core
except ImportError:  # build-tree layout: extension on PYTHONPATH
    from _qdom import *  # noqa: F401,F403
    import _qdom as _core

__all__ = [name for name in dir(_core) if not name.startswith("_")]
__version__ = "0.1.0"
