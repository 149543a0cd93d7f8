"""Quasiconformal extensions of univalent functions with a pole in [0, 1)."""

from ._qcx import *  # noqa: F401,F403
from ._qcx import __doc__  # noqa: F401
