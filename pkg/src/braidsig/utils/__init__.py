"""Utility modules for braidsig."""

from .exceptions import (
    BraidsigError,
    NotPositiveError,
    PreconditionError,
    StrandMismatchError,
    ValidationError,
    WordParseError,
)
from .logging import setup_logging

__all__ = [
    "BraidsigError",
    "NotPositiveError",
    "PreconditionError",
    "StrandMismatchError",
    "ValidationError",
    "WordParseError",
    "setup_logging",
]
