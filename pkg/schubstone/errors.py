import warnings


class SchubstoneError(Exception):
    """Base class for all custom exceptions."""
    pass

class NotFoundError(SchubstoneError):
    pass

class ParseError(SchubstoneError, ValueError):
    """Raised for malformed permutation or index text."""

    def __init__(self, text, position, reason):
        super().__init__(f'Cannot parse "{text}" at position {position}: {reason}')
        self.text = text
        self.position = position

class InvalidPermutationError(SchubstoneError, ValueError):
    pass

class LengthMismatchError(SchubstoneError, ValueError):
    pass

class EmptyPolynomialError(SchubstoneError):
    pass

class NotHomogeneousError(SchubstoneError):
    pass

class NotSchubertPositiveError(SchubstoneError):
    pass

class NoDescentError(SchubstoneError):
    pass

class NotGrassmannianError(SchubstoneError):
    pass

class VanishingFactorError(SchubstoneError, ValueError):
    pass

class BoundError(SchubstoneError):
    pass

class StabilityError(SchubstoneError):
    """A proven stability statement failed; indicates a defect, not bad input."""
    pass

class InternalError(SchubstoneError):
    pass

class SchubstoneWarning(Warning):
    """Base class for all custom warnings."""
    pass


def disable_warnings():
    """Disable all schubstone warnings."""
    warnings.simplefilter('ignore', SchubstoneWarning)


def warning(s):
    warnings.warn(s, SchubstoneWarning, stacklevel=2)
