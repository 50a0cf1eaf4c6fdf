from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from typing import final

from qtangle.exceptions import IllegalSignPatternError, UndeclaredGeneratorError
from qtangle.presentations.quandle_presentation import (
    QuandlePresentation,
    renaming_terms,
)
from qtangle.quandles.quandle_term import GeneratorTerm, QuandleTerm
from qtangle.tangles.signed_boundary import SignedBoundary


@final
@dataclass(frozen=True)
class CrossingEvent:
    """The under-strand label `under_old` becomes `under_new = under_old ▷^exponent over`."""

    under_old: str
    under_new: str
    over: str
    exponent: int


@final
@dataclass(frozen=True)
class CapEvent:
    left: str
    right: str


type SweepEvent = CrossingEvent | CapEvent


@final
@dataclass(frozen=True)
class SweepRecord:
    """Events of a diagram sweep, in order; cabling replays them on parallel copies."""

    events: tuple[SweepEvent, ...] = ()
    generators: tuple[str, ...] = ()

    def rename(self, renaming: Mapping[str, str]) -> "SweepRecord":
        def renamed(name: str) -> str:
            return renaming.get(name, name)

        events: list[SweepEvent] = []

        for event in self.events:
            match event:
                case CrossingEvent(
                    under_old=under_old,
                    under_new=under_new,
                    over=over,
                    exponent=exponent,
                ):
                    events.append(
                        CrossingEvent(
                            renamed(under_old),
                            renamed(under_new),
                            renamed(over),
                            exponent,
                        )
                    )
                case CapEvent(left=left, right=right):
                    events.append(CapEvent(renamed(left), renamed(right)))

        return SweepRecord(
            tuple(events), tuple(renamed(name) for name in self.generators)
        )

    def __add__(self, other: "SweepRecord") -> "SweepRecord":
        return SweepRecord(
            self.events + other.events, self.generators + other.generators
        )


@final
@dataclass(frozen=True)
class BorderedMorphism:
    """A presented quandle with the images of the bottom and top boundary generators.

    `map_bottom[h]` is the image of the h-th bottom point and `map_top[h]` the image
    of the h-th top point. `sweep` is set when the morphism comes from a diagram.
    """

    bottom: SignedBoundary
    top: SignedBoundary
    presentation: QuandlePresentation
    map_bottom: tuple[QuandleTerm, ...]
    map_top: tuple[QuandleTerm, ...]
    sweep: SweepRecord | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if (len(self.map_bottom), len(self.map_top)) != self.shape:
            error_message = (
                f"Boundary maps of lengths {len(self.map_bottom)} and "
                f"{len(self.map_top)} do not match a "
                f"({len(self.bottom)},{len(self.top)}) boundary"
            )
            raise ValueError(error_message)

        declared = set(self.presentation.generators)

        for name in sorted(self.boundary_generators() - declared):
            raise UndeclaredGeneratorError(name)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.bottom), len(self.top))

    def boundary_generators(self) -> frozenset[str]:
        names: frozenset[str] = frozenset()

        for term in self.map_bottom + self.map_top:
            names |= term.generators()

        return names

    def rename(self, renaming: Mapping[str, str]) -> "BorderedMorphism":
        if len(renaming) == 0:
            return self

        replacements = renaming_terms(renaming)
        return BorderedMorphism(
            self.bottom,
            self.top,
            self.presentation.rename(renaming),
            tuple(term.substitute(replacements) for term in self.map_bottom),
            tuple(term.substitute(replacements) for term in self.map_top),
            self.sweep.rename(renaming) if self.sweep is not None else None,
        )

    def with_presentation(
        self, presentation: QuandlePresentation
    ) -> "BorderedMorphism":
        return BorderedMorphism(
            self.bottom, self.top, presentation, self.map_bottom, self.map_top
        )


def identity_morphism(
    boundary: SignedBoundary | Sequence[int], prefix: str = "a"
) -> BorderedMorphism:
    """Return the free presentation on the boundary points with identity boundary maps."""
    signs = SignedBoundary.of(boundary)
    names = tuple(f"{prefix}{position}" for position in range(1, len(signs) + 1))
    terms = tuple(GeneratorTerm(name) for name in names)
    return BorderedMorphism(
        signs,
        signs,
        QuandlePresentation.free(names),
        terms,
        terms,
        SweepRecord((), names),
    )


def cup_morphism(
    signs: SignedBoundary | Sequence[int], prefix: str = "x"
) -> BorderedMorphism:
    """Return the morphism of the rainbow cup tangle: `i⁺(a_h) = i⁺(a_{2k-h+1}) = x_h`."""
    boundary = SignedBoundary.of(signs)
    width = len(boundary)

    if width % 2 != 0 or boundary != boundary.reversed_negated():
        raise IllegalSignPatternError(boundary.signs, "cup tangle")

    names = tuple(f"{prefix}{position}" for position in range(1, width // 2 + 1))
    inner = [GeneratorTerm(name) for name in names]
    image = tuple(inner + inner[::-1])
    return BorderedMorphism(
        SignedBoundary(), boundary, QuandlePresentation.free(names), (), image
    )


def plat_morphism(
    signs: SignedBoundary | Sequence[int], prefix: str = "x"
) -> BorderedMorphism:
    """Return the morphism of the plat tangle: `j⁺(a_{2h-1}) = j⁺(a_{2h}) = x_h`."""
    boundary = SignedBoundary.of(signs)
    width = len(boundary)

    if width % 2 != 0 or any(
        boundary[index] != -boundary[index + 1] for index in range(0, width, 2)
    ):
        raise IllegalSignPatternError(boundary.signs, "plat tangle")

    names = tuple(f"{prefix}{position}" for position in range(1, width // 2 + 1))
    image = tuple(GeneratorTerm(name) for name in names for _ in range(2))
    return BorderedMorphism(
        SignedBoundary(), boundary, QuandlePresentation.free(names), (), image
    )


def reverse_morphism(morphism: BorderedMorphism) -> BorderedMorphism:
    """Return the morphism of the reflected tangle, which presents the same quandle."""
    return BorderedMorphism(
        morphism.top.reversed_negated(),
        morphism.bottom.reversed_negated(),
        morphism.presentation,
        morphism.map_top[::-1],
        morphism.map_bottom[::-1],
    )
