"""Exception hierarchy shared by every hermackey package."""


class HermackeyError(ValueError):
    """Base class for all library errors."""


class NotUnit(HermackeyError):
    """A matrix or ring element has no two-sided inverse."""


class InvalidAntiInvolution(HermackeyError):
    """A map fails to be an anti-involution."""


class InvalidGroupTable(HermackeyError):
    """A multiplication table does not define a group or monoid."""


class EvenModulus(HermackeyError):
    """2 is not invertible modulo the given integer."""


class SectionMismatch(HermackeyError):
    """Two group Mackey functors use different groups, involutions or sections."""


class NotTambara(HermackeyError):
    """The operation needs a Tambara structure on the base."""


class NotAForm(HermackeyError):
    """The restriction of a matrix element is not invertible."""


class TooLarge(HermackeyError):
    """An enumeration exceeds its configured limit."""


class NotWellDefined(HermackeyError):
    """A map does not descend to the stated quotient."""

    def __init__(self, message: str, witness: object = None):
        super().__init__(message)
        self.witness = witness


class TruncationTooShallow(HermackeyError):
    """Requested levels exceed the truncation of a semi-simplicial set."""


class UnknownReference(HermackeyError):
    """An input document names an object that was never declared."""


class ParseError(HermackeyError):
    """An input document could not be parsed."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        location = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{message}{location}")
        self.line = line
        self.column = column


class ValidationError(HermackeyError):
    """A declaration parsed but violates a constructor invariant."""

    def __init__(self, message: str, invariant: str | None = None):
        super().__init__(message)
        self.invariant = invariant
