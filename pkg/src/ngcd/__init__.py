"""GCD of n non-negative integers: n-way Euclid and binary algorithms."""
from .core import (
    GcdResult,
    OpCounters,
    TraceEvent,
    binary_gcd_n,
    fold_gcd,
    gcd_n,
    gcd_pair,
)

__version__ = "0.1.0"

__all__ = [
    "GcdResult",
    "OpCounters",
    "TraceEvent",
    "binary_gcd_n",
    "fold_gcd",
    "gcd_n",
    "gcd_pair",
]
