"""Desargues-Cayley-Danzer configurations from Python.

The heavy lifting lives in the compiled ``_core`` module; this package
re-exports it.
"""

from ._core import *  # noqa: F401,F403
from ._core import DcdkitError, Graph, IncidenceStructure

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
