"""Incidence complexes, regular 4-apeirotopes and the rank-4 audit.

Complexes are opaque handles; reports are plain dicts with the same fields
as the command-line tool's JSON output.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
