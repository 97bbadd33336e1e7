"""Exception hierarchy shared by all modules."""


class DoubleSumError(Exception):
    """Base class for errors raised by this package."""


class DimensionError(DoubleSumError, ValueError):
    """A matrix has the wrong shape for the requested operation."""


class DomainError(DoubleSumError, ValueError):
    """Inputs fall outside the domain where a quantity is defined."""


class DivisibilityError(DoubleSumError, ArithmeticError):
    """A polynomial division that should be exact left a remainder."""


class SizeGuardError(DoubleSumError, RuntimeError):
    """A symbolic construction was requested beyond its size guard."""


class InvariantViolation(DoubleSumError, RuntimeError):
    """An identity that must hold by construction failed (a bug)."""
