from collections.abc import Sequence
from dataclasses import dataclass
from typing import final, override

from qtangle.fundamental_quandle import bq
from qtangle.presentations.bordered_morphism import CrossingEvent
from qtangle.quandles.free_quandle import FreeQuandleElement, fq_op
from qtangle.quandles.quandle_term import GeneratorTerm
from qtangle.tangles.named_tangles import braid


def boundary_generator(position: int) -> str:
    """Return the name `a<h>` of the generator of the 1-based boundary point `h`."""
    return f"a{position}"


@final
@dataclass(frozen=True)
class BraidAutomorphism:
    """The automorphism of the free quandle on `a1..ak` induced by a braid.

    `images[h]` is the image of `a<h+1>`: the arc leaving bottom point `h + 1`,
    written over the arcs at the top.
    """

    strands: int
    images: tuple[FreeQuandleElement, ...]

    @classmethod
    def identity(cls, strands: int) -> "BraidAutomorphism":
        return cls(
            strands,
            tuple(
                FreeQuandleElement(boundary_generator(position))
                for position in range(1, strands + 1)
            ),
        )

    @property
    def is_identity(self) -> bool:
        return self == BraidAutomorphism.identity(self.strands)

    def then(self, other: "BraidAutomorphism") -> "BraidAutomorphism":
        """Return the action of the braid `self` followed by the braid `other` stacked above it."""
        substitution = {
            boundary_generator(position): image
            for position, image in enumerate(other.images, start=1)
        }
        return BraidAutomorphism(
            self.strands, tuple(image.substitute(substitution) for image in self.images)
        )

    @override
    def __str__(self) -> str:
        return "\n".join(
            f"{boundary_generator(position)} -> {image}"
            for position, image in enumerate(self.images, start=1)
        )


def braid_action(word: Sequence[int], strands: int) -> BraidAutomorphism:
    """Compute the free quandle automorphism of a braid word (`i` for `σ_i`, `-i` for `σ_i⁻¹`).

    The braid is swept and its relations are solved from the top down, so every
    bottom arc is written over the top arcs `a1..ak`.

    Raises:
        IndexOutOfRangeError: A letter is not in `1..strands-1`.

    """
    morphism = bq(braid(strands, word))
    values = {
        _name_of(term): FreeQuandleElement(boundary_generator(position))
        for position, term in enumerate(morphism.map_top, start=1)
    }

    if morphism.sweep is not None:
        for event in reversed(morphism.sweep.events):
            if isinstance(event, CrossingEvent):
                values[event.under_old] = fq_op(
                    values[event.under_new], values[event.over], -event.exponent
                )

    return BraidAutomorphism(
        strands, tuple(values[_name_of(term)] for term in morphism.map_bottom)
    )


def parse_braid_word(text: str) -> tuple[int, ...]:
    """Parse letters written as signed integers, e.g. `1 -2 3`; commas are accepted as separators."""
    letters = text.replace(",", " ").split()

    try:
        word = tuple(int(letter) for letter in letters)
    except ValueError as error:
        error_message = f"Braid letters must be nonzero integers, got '{text}'"
        raise ValueError(error_message) from error

    if 0 in word:
        error_message = f"Braid letters must be nonzero integers, got '{text}'"
        raise ValueError(error_message)

    return word


def _name_of(term: object) -> str:
    if not isinstance(term, GeneratorTerm):
        error_message = f"Expected a generator, got {term!r}"
        raise TypeError(error_message)

    return term.name
