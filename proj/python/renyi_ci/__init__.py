"""Renyi common information of the doubly symmetric binary source."""

from ._renyi_ci import *  # noqa: F401,F403
from ._renyi_ci import __version__  # noqa: F401
