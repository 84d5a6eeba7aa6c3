"""Exception types shared across the code families."""


class DecodeError(ValueError):
    """Received word could not be decoded under the channel model."""


class NoSolution(DecodeError):
    """An algebraic system admits no solution in the allowed range."""


class AmbiguousDecoding(DecodeError):
    """More than one codeword explains the received word."""


class BCHDecodeFailure(DecodeError):
    pass


class MarkerNotFound(DecodeError):
    pass


class CapacityExceeded(ValueError):
    pass


class InapplicablePattern(ValueError):
    """Error pattern does not fit the string it is applied to."""


class GridTooLarge(ValueError):
    pass
