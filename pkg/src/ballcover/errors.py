"""Exception types shared across the package.

Three failure categories are distinguished so callers (and the CLI) can
map them to exit codes: bad input data, mathematically undefined requests,
and features that are deliberately out of scope.
"""


class BallcoverError(Exception):
    """Base class for all errors raised by this package."""


class InputError(BallcoverError, ValueError):
    """Malformed or inconsistent input (wrong dimension, bad parameter range)."""


class DomainError(BallcoverError, ValueError):
    """Input is well-formed but the operation is undefined there.

    Examples: logarithmic map at an antipodal pair, exponential map past
    the injectivity radius.
    """


class UnsupportedFeatureError(BallcoverError, NotImplementedError):
    """Requested combination is recognized but intentionally unsupported."""
