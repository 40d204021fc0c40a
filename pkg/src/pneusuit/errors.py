"""Exception types shared across the toolkit."""


class DomainError(ValueError):
    """A physical quantity is outside the model's domain."""


class ConstraintError(DomainError):
    """A design constraint (packing limit, actuator count) is violated."""


class ParseError(ValueError):
    """An input file is malformed; the message names the offending line."""


class UsageError(ValueError):
    """The caller asked for something the API does not offer."""
