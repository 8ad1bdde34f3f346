class SchemaError(ValueError):
    """An input document or token does not match its declared format."""


class CapacityError(RuntimeError):
    """An exhaustive search exceeded its configured bound.

    Raised instead of returning a possibly wrong answer.
    """
