"""Streaming independent-set algorithms, exact oracles and lower-bound gadgets."""

from . import algorithms, core, gadgets, harness
from .errors import (
    GadgetError,
    GeometryError,
    OracleLimitError,
    StreamError,
    StreamFormatError,
    StreamisError,
)

__version__ = "0.1.0"
