"""Chorded cycle toolkit.

Python bindings for the C++ core: chorded-cycle detection with witnesses,
ear and block-path decompositions of non-chorded graphs, guaranteed
low-degree independent sets, exact sigma_t and vertex-disjoint packing,
and the extremal family generators.
"""

from chorded._core import *  # noqa: F401,F403
from chorded._core import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
__doc__ = _core_doc
