"""Exact arithmetic for hypergeometric series modulo primes.

The package decides, with exact rational and finite-field arithmetic, how a
generalized hypergeometric series behaves modulo a prime p: whether it can be
reduced, the dimension and an explicit basis of the mod-p solution space of
its differential operator, an annihilating q-linearized polynomial, and the
Galois group of the reduction, together with symbolic certificates that are
uniform over congruence classes of p.
"""

__version__ = "0.1.0"

from .errors import (
    NoViolationError,
    NotApplicableError,
    NotFoundWithinBounds,
    PreconditionError,
)

__all__ = [
    "PreconditionError",
    "NotApplicableError",
    "NoViolationError",
    "NotFoundWithinBounds",
    "__version__",
]
