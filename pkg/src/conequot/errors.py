"""Error taxonomy shared across the package.

The CLI maps these onto exit codes: input problems exit 2, enumeration
caps exit 3, internal invariant failures exit 4.
"""


class ConequotError(Exception):
    """Base class for package errors."""


class InputError(ConequotError):
    """Malformed or inconsistent user-supplied data."""


class BunchError(InputError):
    """A supplied bunch violates its defining conditions."""


class DomainError(InputError):
    """An argument lies outside the mathematical domain of an operation."""


class CapError(ConequotError):
    """An enumeration exceeded a configured size cap."""


class InternalError(ConequotError):
    """A self-check failed; indicates a bug, not bad input."""
