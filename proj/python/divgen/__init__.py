"""Diversification-based solution generators.

Thin wrapper over the compiled _divgen extension: diverse binary, bounded
and permutation collections, opposite points (classical, contracted-bound
and max-min), lifting binary collections to bounded vectors, and projection
onto structured feasible regions.
"""

from ._divgen import *  # noqa: F401,F403
from ._divgen import __version__  # noqa: F401
