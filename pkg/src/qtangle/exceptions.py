from collections.abc import Sequence
from enum import IntEnum
from typing import final


class QtangleError(Exception):
    """Base exception for qtangle."""


class QuandleAxiom(IntEnum):
    IDEMPOTENCY = 1
    RIGHT_INVERTIBILITY = 2
    SELF_DISTRIBUTIVITY = 3


@final
class QuandleAxiomError(QtangleError):
    """The exception that is thrown when an operation table violates a quandle axiom."""

    def __init__(self, axiom: QuandleAxiom, witness: tuple[int, ...]) -> None:
        self.axiom = axiom
        self.witness = witness
        message = (
            f"Quandle axiom {axiom.value} ({axiom.name.lower()}) "
            f"is violated at {witness}"
        )
        super().__init__(message)


@final
class InvalidQuandleTableError(QtangleError):
    """The exception that is thrown when an operation table cannot describe a finite quandle."""

    def __init__(self, reason: str) -> None:
        self.reason = reason
        super().__init__(f"Invalid quandle table: {reason}")


@final
class UnknownQuandleError(QtangleError):
    """The exception that is thrown when a quandle name is neither a builtin nor a readable table file."""

    def __init__(self, spec: str) -> None:
        self.spec = spec
        message = (
            f"Unknown quandle '{spec}', expected 'dihedral:n' with 1 <= n <= 64, "
            "'conj-sym3' or a table file"
        )
        super().__init__(message)


@final
class UnassignedGeneratorError(QtangleError):
    """The exception that is thrown when a term mentions a generator without an assigned element."""

    def __init__(self, name: str) -> None:
        self.name = name
        super().__init__(f"Generator '{name}' has no assigned element")


@final
class DuplicateGeneratorError(QtangleError):
    """The exception that is thrown when a presentation declares a generator twice."""

    def __init__(self, name: str) -> None:
        self.name = name
        super().__init__(f"Generator '{name}' is declared more than once")


@final
class UndeclaredGeneratorError(QtangleError):
    """The exception that is thrown when a term uses a generator that the presentation does not declare."""

    def __init__(self, name: str) -> None:
        self.name = name
        super().__init__(f"Generator '{name}' is not declared by the presentation")


@final
class BoundaryMismatchError(QtangleError):
    """The exception that is thrown when two signed boundaries that must agree differ."""

    def __init__(self, expected: Sequence[int], got: Sequence[int]) -> None:
        self.expected = tuple(expected)
        self.got = tuple(got)
        message = (
            f"Boundary mismatch: expected {_format_signs(self.expected)}, "
            f"got {_format_signs(self.got)}"
        )
        super().__init__(message)


@final
class IllegalSignPatternError(QtangleError):
    """The exception that is thrown when a sign pattern does not admit the requested cup or plat shape."""

    def __init__(self, signs: Sequence[int], shape: str) -> None:
        self.signs = tuple(signs)
        self.shape = shape
        message = f"Sign pattern {_format_signs(self.signs)} does not admit a {shape}"
        super().__init__(message)


@final
class SignConventionError(QtangleError):
    """The exception that is thrown when a construction receives boundaries with the wrong orientation."""

    def __init__(self, expected: Sequence[int], got: Sequence[int]) -> None:
        self.expected = tuple(expected)
        self.got = tuple(got)
        message = (
            f"Orientation convention requires {_format_signs(self.expected)}, "
            f"got {_format_signs(self.got)}"
        )
        super().__init__(message)


@final
class IndexOutOfRangeError(QtangleError):
    """The exception that is thrown when a slice or braid letter acts outside the strands of its level."""

    def __init__(self, index: int, width: int) -> None:
        self.index = index
        self.width = width
        super().__init__(f"Index {index} is out of range for a level of width {width}")


class LocatedError(QtangleError):
    """Base exception for diagram and parse errors that can point at a source position."""

    def __init__(
        self,
        message: str,
        slice_index: int | None = None,
        line: int | None = None,
        column: int | None = None,
    ) -> None:
        self.detail = message
        self.slice_index = slice_index
        self.line = line
        self.column = column

        if line is not None:
            message = f"{message} (line {line}, column {column or 1})"
        elif slice_index is not None:
            message = f"{message} (slice {slice_index})"

        super().__init__(message)

    def located(self, line: int, column: int) -> "LocatedError":
        """Return a copy of the error attached to a source position."""
        return type(self)(self.detail, self.slice_index, line, column)


@final
class TangleSyntaxError(LocatedError):
    """The exception that is thrown when tangle source text does not follow the grammar."""


@final
class TangleWidthError(LocatedError):
    """The exception that is thrown when a slice does not fit the width of its level."""


@final
class TangleOrientationError(LocatedError):
    """The exception that is thrown when strand orientations cannot be propagated consistently."""


@final
class PresentationSyntaxError(LocatedError):
    """The exception that is thrown when presentation text does not follow the grammar."""


@final
class MissingSweepRecordError(QtangleError):
    """The exception that is thrown when a cable is requested for a morphism that was not produced from a diagram."""

    def __init__(self) -> None:
        super().__init__(
            "Cabling needs the crossing record of a morphism built from a diagram"
        )


def _format_signs(signs: Sequence[int]) -> str:
    return "(" + ",".join("+" if sign > 0 else "-" for sign in signs) + ")"
