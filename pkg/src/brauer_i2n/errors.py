"""Exception types raised across the package."""


class BrauerError(Exception):
    """Base class for every error raised by brauer_i2n."""


class InvalidParameter(BrauerError, ValueError):
    pass


class ParseError(BrauerError, ValueError):
    """Malformed serialized input. ``position`` locates the offending part."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at {position})"
        super().__init__(message)


class NotSymmetricError(BrauerError, ValueError):
    pass


class InvalidSubgroup(BrauerError, ValueError):
    pass


class RelationFailure(BrauerError):
    """A relation's two sides map to different matchings."""

    def __init__(self, source, detail=""):
        self.source = source
        super().__init__(f"relation {source} fails as a diagram identity" + (f": {detail}" if detail else ""))


class ThetaInconsistency(BrauerError):
    """A parameter received two different (or negative) exponent values."""

    def __init__(self, parameter, values):
        self.parameter = parameter
        self.values = tuple(values)
        super().__init__(f"inconsistent exponent for {parameter}: {list(self.values)}")


class UnsupportedSize(BrauerError, ValueError):
    pass
