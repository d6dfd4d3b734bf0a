"""Exact Hochschild, cyclic and periodic cyclic homology of crossed products."""

from ._orbhc import *  # noqa: F401,F403
from ._orbhc import __doc__  # noqa: F401
