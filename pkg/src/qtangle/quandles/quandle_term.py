from abc import ABC, abstractmethod
from collections.abc import Iterator, Mapping
from dataclasses import dataclass
from enum import StrEnum
from functools import cached_property
from typing import TYPE_CHECKING, final, override

from qtangle.exceptions import UnassignedGeneratorError

if TYPE_CHECKING:
    from qtangle.quandles.finite_quandle import FiniteQuandle


class TermOperator(StrEnum):
    """Binary quandle operations, spelled as in the presentation text format."""

    TRIANGLE = "^"
    INVERSE_TRIANGLE = "v"

    @property
    def exponent(self) -> int:
        return 1 if self is TermOperator.TRIANGLE else -1

    @classmethod
    def from_exponent(cls, exponent: int) -> "TermOperator":
        return cls.TRIANGLE if exponent > 0 else cls.INVERSE_TRIANGLE


class QuandleTerm(ABC):
    """Syntax tree over named generators with the operations ▷ and ◁."""

    @abstractmethod
    def leaves(self) -> Iterator[str]:
        """Yield generator names from left to right, with repetitions."""

    @property
    @abstractmethod
    def depth(self) -> int: ...

    @property
    @abstractmethod
    def size(self) -> int:
        """Number of nodes."""

    @abstractmethod
    def substitute(
        self, replacements: Mapping[str, "QuandleTerm"]
    ) -> "QuandleTerm": ...

    def generators(self) -> frozenset[str]:
        return frozenset(self.leaves())

    def mentions(self, name: str) -> bool:
        return name in self.generators()

    def triangle(self, other: "QuandleTerm") -> "QuandleTerm":
        return OperationTerm(self, TermOperator.TRIANGLE, other)

    def inverse_triangle(self, other: "QuandleTerm") -> "QuandleTerm":
        return OperationTerm(self, TermOperator.INVERSE_TRIANGLE, other)

    def act(self, other: "QuandleTerm", exponent: int) -> "QuandleTerm":
        """Return `self ▷ other` for a positive exponent and `self ◁ other` otherwise."""
        return OperationTerm(self, TermOperator.from_exponent(exponent), other)


@final
@dataclass(frozen=True)
class GeneratorTerm(QuandleTerm):
    name: str

    @override
    def leaves(self) -> Iterator[str]:
        yield self.name

    @property
    @override
    def depth(self) -> int:
        return 0

    @property
    @override
    def size(self) -> int:
        return 1

    @override
    def substitute(self, replacements: Mapping[str, QuandleTerm]) -> QuandleTerm:
        return replacements.get(self.name, self)

    @override
    def __str__(self) -> str:
        return self.name


@final
@dataclass(frozen=True)
class OperationTerm(QuandleTerm):
    left: QuandleTerm
    operator: TermOperator
    right: QuandleTerm

    @override
    def leaves(self) -> Iterator[str]:
        yield from self.left.leaves()
        yield from self.right.leaves()

    @property
    @override
    def depth(self) -> int:
        return self._depth

    @property
    @override
    def size(self) -> int:
        return self._size

    @cached_property
    def _depth(self) -> int:
        return 1 + max(self.left.depth, self.right.depth)

    @cached_property
    def _size(self) -> int:
        return 1 + self.left.size + self.right.size

    @override
    def generators(self) -> frozenset[str]:
        return self._generators

    @cached_property
    def _generators(self) -> frozenset[str]:
        return self.left.generators() | self.right.generators()

    @override
    def substitute(self, replacements: Mapping[str, QuandleTerm]) -> QuandleTerm:
        if self.generators().isdisjoint(replacements):
            return self

        return OperationTerm(
            self.left.substitute(replacements),
            self.operator,
            self.right.substitute(replacements),
        )

    @override
    def __str__(self) -> str:
        return f"{_nested(self.left)} {self.operator.value} {_nested(self.right)}"


def generator(name: str) -> GeneratorTerm:
    return GeneratorTerm(name)


def eval_term(
    term: QuandleTerm, assignment: Mapping[str, int], quandle: "FiniteQuandle"
) -> int:
    """Evaluate a term in a finite quandle, using ▷ for `^` and ◁ for `v`."""
    match term:
        case GeneratorTerm(name=name):
            if name not in assignment:
                raise UnassignedGeneratorError(name)

            return assignment[name]
        case OperationTerm(left=left, operator=operator, right=right):
            left_value = eval_term(left, assignment, quandle)
            right_value = eval_term(right, assignment, quandle)

            if operator is TermOperator.TRIANGLE:
                return quandle.op(left_value, right_value)

            return quandle.inverse_op(left_value, right_value)
        case _:
            error_message = f"Unsupported term node {term!r}"
            raise TypeError(error_message)


def _nested(term: QuandleTerm) -> str:
    if isinstance(term, GeneratorTerm):
        return term.name

    return f"({term})"
