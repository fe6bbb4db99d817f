"""Exception types shared across the library.

Every error carries a machine-readable ``kind`` consumed by the CLI when it
emits structured error JSON, plus the process exit code the CLI maps it to.
"""


class LoopspaceError(Exception):
    kind = "Error"
    exit_code = 3


class SchemaError(LoopspaceError):
    """Malformed input: bad JSON shape, bad scalar string, bad options."""

    kind = "Schema"
    exit_code = 2


class MixedContext(LoopspaceError):
    """Operands built over different fields, variable counts or shapes."""

    kind = "MixedContext"


class ShapeMismatch(LoopspaceError):
    kind = "ShapeMismatch"


class NotUnivariate(LoopspaceError):
    kind = "NotUnivariate"


class SizeLimit(LoopspaceError):
    """Input exceeds the configured degree/size caps; fail loudly, never hang."""

    kind = "SizeLimit"
    exit_code = 4


class RelationViolated(LoopspaceError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index

    kind = "RelationViolated"


class InvalidMorphism(LoopspaceError):
    kind = "InvalidMorphism"


class InfiniteDimensional(LoopspaceError):
    kind = "InfiniteDimensional"


class DivisionByZeroPoly(LoopspaceError):
    kind = "DivisionByZeroPoly"
