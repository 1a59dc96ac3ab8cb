"""Exact type-B Stirling, Cauchy and Lah numbers.

Rational results are ``fractions.Fraction``; integer results are ``int``.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
