"""Exact truncated hypergeometric series, truncated multiple zeta values and
their generating functions, with a harness that checks the identities
relating them.
"""

from .errors import DegenerateArgument, FiniteHyperError, Pole
from .exact import Rational, as_rational, rising_factorial
from .series import TruncatedSeries

__version__ = "0.1.0"

__all__ = ["DegenerateArgument", "FiniteHyperError", "Pole", "Rational", "TruncatedSeries",
           "as_rational", "rising_factorial", "__version__"]
