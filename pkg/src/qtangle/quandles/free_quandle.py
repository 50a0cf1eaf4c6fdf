from collections.abc import Mapping
from dataclasses import dataclass
from typing import final, override

from qtangle.quandles.free_group_word import FreeGroupWord
from qtangle.quandles.quandle_term import GeneratorTerm, OperationTerm, QuandleTerm


@final
@dataclass(frozen=True)
class FreeQuandleElement:
    """An element `(base, tail)` of the free quandle, kept in normal form.

    The pair stands for the base generator acted on by the letters of the tail, so
    `(x, a) ▷ (y, b) = (x, a·b⁻¹·y·b)`. Leading letters equal to the base are
    stripped, which makes two elements equal exactly when their fields are equal.
    """

    base: str
    tail: FreeGroupWord = FreeGroupWord()

    def __post_init__(self) -> None:
        object.__setattr__(self, "tail", _strip_base(self.base, self.tail))

    @classmethod
    def generator(cls, name: str) -> "FreeQuandleElement":
        return cls(name)

    def triangle(self, other: "FreeQuandleElement") -> "FreeQuandleElement":
        return fq_op(self, other, 1)

    def inverse_triangle(self, other: "FreeQuandleElement") -> "FreeQuandleElement":
        return fq_op(self, other, -1)

    def generators(self) -> frozenset[str]:
        return self.tail.generators() | {self.base}

    def substitute(
        self, images: Mapping[str, "FreeQuandleElement"]
    ) -> "FreeQuandleElement":
        """Apply the free quandle homomorphism that sends each named generator to its image."""
        result = images.get(self.base, FreeQuandleElement(self.base))

        for name, exponent in self.tail:
            result = fq_op(result, images.get(name, FreeQuandleElement(name)), exponent)

        return result

    def to_term(self) -> QuandleTerm:
        term: QuandleTerm = GeneratorTerm(self.base)

        for name, exponent in self.tail:
            term = term.act(GeneratorTerm(name), exponent)

        return term

    @override
    def __str__(self) -> str:
        if self.tail.is_identity:
            return self.base

        return f"({self.base}, {self.tail})"


def fq_op(
    first: FreeQuandleElement, second: FreeQuandleElement, sign: int
) -> FreeQuandleElement:
    """Return `first ▷ second` for a positive sign and `first ◁ second` otherwise."""
    action = FreeGroupWord.letter(second.base, sign).conjugate_by(second.tail)
    return FreeQuandleElement(first.base, first.tail * action)


def from_term(term: QuandleTerm) -> FreeQuandleElement:
    """Evaluate a term in the free quandle on its generators."""
    match term:
        case GeneratorTerm(name=name):
            return FreeQuandleElement(name)
        case OperationTerm(left=left, operator=operator, right=right):
            return fq_op(from_term(left), from_term(right), operator.exponent)
        case _:
            error_message = f"Unsupported term node {term!r}"
            raise TypeError(error_message)


def _strip_base(base: str, tail: FreeGroupWord) -> FreeGroupWord:
    letters = tail.letters
    start = 0

    while start < len(letters) and letters[start][0] == base:
        start += 1

    if start == 0:
        return tail

    return FreeGroupWord(letters[start:])
