"""Superoscillation synthesis and analysis.

Thin wrapper over the compiled extension; see the project README for the
full tour of constructors, analysis operations and the quantum module.
"""

try:
    from ._superosc import *  # noqa: F401,F403  (installed package layout)
    from ._superosc import __doc__ as _core_doc
except ImportError:  # development layout: extension on PYTHONPATH
    from _superosc import *  # noqa: F401,F403
    from _superosc import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
