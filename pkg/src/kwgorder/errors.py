"""Exception types shared across the package."""


class ParameterDomainError(ValueError):
    """A parameter lies outside its admissible domain (e.g. rate <= 0)."""


class DimensionMismatchError(ValueError):
    """Paired vectors have unequal lengths."""


class SurvivalUnderflowError(FloatingPointError):
    """A survival factor underflowed to zero at the given point.

    Raised instead of returning inf/0 so that grid construction is forced
    to stay inside the numerically meaningful region.
    """

    def __init__(self, x, message="survival factor underflowed to zero"):
        self.x = x
        super().__init__(f"{message} at x={x!r}")


class EvaluationError(ArithmeticError):
    """A scanned function produced a non-finite value at the given point."""

    def __init__(self, x, value):
        self.x = x
        self.value = value
        super().__init__(f"non-finite value {value!r} at x={x!r}")


class ScenarioError(ValueError):
    """A scenario file failed to parse or validate."""

    def __init__(self, message, line=None, field=None):
        self.line = line
        self.field = field
        parts = []
        if line is not None:
            parts.append(f"line {line}")
        if field is not None:
            parts.append(f"field '{field}'")
        prefix = " ".join(parts)
        super().__init__(f"{prefix}: {message}" if prefix else message)
