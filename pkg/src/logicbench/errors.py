"""Exception types shared across the engine."""


class ParseError(ValueError):
    """Raised on malformed formula or strategy text.

    ``position`` is the 0-based character offset of the offending token,
    ``expected`` the set of token descriptions that would have been legal.
    """

    def __init__(self, message, position=None, expected=()):
        super().__init__(message)
        self.position = position
        self.expected = tuple(expected)


class WrongLogicError(ParseError):
    """An operator of another logic was used (e.g. a modality in PL mode)."""


class EvaluationError(ValueError):
    """Evaluation hit a missing atom, unknown world, or unassigned variable."""


class NormalFormError(ValueError):
    """A formula does not have (or cannot be checked for) the requested shape."""


class KindMismatchError(TypeError):
    """A value of the wrong kind was supplied (task answers, model checks)."""


class StateError(RuntimeError):
    """A proof-state operation was used outside its precondition."""


class UnificationError(ValueError):
    """Two literals do not unify. ``reason`` is a machine-readable code."""

    def __init__(self, message, reason):
        super().__init__(message)
        self.reason = reason


class SchemaError(ValueError):
    """A JSON document violates the expected schema; ``path`` locates it."""

    def __init__(self, message, path=""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


class FeedbackError(ValueError):
    """A feedback strategy or generator was used with an incompatible context."""
