"""Optimal budget splitting under logarithmic diminishing returns."""

from waterfill.core import *  # noqa: F401,F403
from waterfill.core import __all__ as _core_all
from waterfill.errors import DimensionError, DomainError, ProfileError, WaterfillError

__all__ = [*_core_all, "DimensionError", "DomainError", "ProfileError", "WaterfillError"]
__version__ = "0.1.0"
