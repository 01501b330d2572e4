"""Exception types shared across the package."""


class PauliError(Exception):
    """Base class for every error this package raises deliberately."""


class ParseError(PauliError, ValueError):
    """Malformed Pauli-string text."""


class DimensionError(PauliError, ValueError):
    """Operands act on different site counts or vector dimensions."""


class SizeError(PauliError, ValueError):
    """Request exceeds a hard size cap (dense realization, enumeration, modes)."""


class ContractError(PauliError, ValueError):
    """A precondition was violated (non-hermitian input, wrong classification, ...)."""


class DegenerateError(ContractError):
    """Input is degenerate for the requested operation (identity word, zero vector)."""


class NumericalError(PauliError, RuntimeError):
    """A numerical guarantee could not be met."""
