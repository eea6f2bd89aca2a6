"""Negative binomial states of a single field mode.

Thin wrapper over the compiled ``_core`` extension.  Every function takes
plain floats and ints; states come back as ``FockVector`` or
``PairBasisVector`` objects.
"""

from ._core import *  # noqa: F401,F403
from ._core import ConvergenceError, NumericalError, TruncationError  # noqa: F401

__version__ = "0.1.0"
