"""Exact engine for the Explorer-Director game on finite connected graphs.

The heavy lifting lives in the compiled extension ``exdirgame._core``;
this package re-exports its public surface.
"""

from exdirgame._core import *  # noqa: F401,F403
from exdirgame._core import __version__  # noqa: F401
