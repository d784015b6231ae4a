"""Tournament combinatorics: canonical forms, tr, galaxies, smooth structures."""

from tourney._core import *  # noqa: F401,F403
from tourney._core import __doc__  # noqa: F401
