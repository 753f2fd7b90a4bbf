"""Exception hierarchy shared by all solvers."""


class MolError(Exception):
    """Base class for errors raised by molines."""


class InputError(MolError, ValueError):
    """Invalid user input: sizes, shapes, boundary tags, non-finite data."""


class DomainError(InputError):
    """An evaluation point or parameter lies outside its admissible domain."""


class NumericFailure(MolError, ArithmeticError):
    """A numerical procedure failed to converge or isolate its targets."""


class InstabilityError(NumericFailure):
    """Time stepping produced non-finite values."""
