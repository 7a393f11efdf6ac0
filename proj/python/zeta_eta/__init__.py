"""Python bindings for the zeta_eta library."""

from ._core import *  # noqa: F401,F403
from ._core import ZetaEtaError, __version__  # noqa: F401
