"""Exception types shared across the package."""


class InputError(ValueError):
    """Raised when caller-supplied data violates a precondition.

    Maps to exit code 2 on the command line.
    """


class NumericalError(RuntimeError):
    """Raised when a numerical routine fails to converge or produces
    unusable output.

    Maps to exit code 3 on the command line.
    """
