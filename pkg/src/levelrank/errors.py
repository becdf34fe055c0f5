"""Exception hierarchy shared by the library and the CLI."""


class LevelRankError(Exception):
    """Base class for all errors raised by levelrank."""


class ParseError(LevelRankError, ValueError):
    def __init__(self, message, text=None, position=None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class EnumerationLimitError(LevelRankError):
    """A brute-force enumeration would exceed the configured bound."""


class DimensionError(LevelRankError, ValueError):
    """Runner / component / charge counts do not line up."""


class NotACoreError(LevelRankError, ValueError):
    pass


class InvalidCuspidalError(LevelRankError, ValueError):
    pass


class CoprimalityError(LevelRankError, ValueError):
    pass


class TheoremViolation(LevelRankError):
    """Raised when a brute-force check contradicts a proven statement.

    This always means an implementation bug; ``payload`` names the offending
    instance.
    """

    def __init__(self, message, payload=None):
        self.payload = payload or {}
        super().__init__(message)
