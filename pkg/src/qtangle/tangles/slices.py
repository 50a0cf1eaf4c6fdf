from dataclasses import dataclass
from enum import StrEnum
from typing import final


class CrossingKind(StrEnum):
    """POSITIVE: the strand entering at the lower left passes over."""

    POSITIVE = "x"
    NEGATIVE = "xbar"

    def mirrored(self) -> "CrossingKind":
        if self is CrossingKind.POSITIVE:
            return CrossingKind.NEGATIVE

        return CrossingKind.POSITIVE


@final
@dataclass(frozen=True)
class Crossing:
    """A crossing of the strands at positions `index` and `index + 1` (0-based)."""

    index: int
    kind: CrossingKind = CrossingKind.POSITIVE

    @property
    def width_change(self) -> int:
        return 0

    def shifted(self, offset: int) -> "Crossing":
        return Crossing(self.index + offset, self.kind)


@final
@dataclass(frozen=True)
class Cup:
    """A minimum creating two strands at positions `index` and `index + 1`.

    `orientation` is the sign of the new left strand; the right strand gets the
    opposite sign. `None` leaves it to be resolved by the diagram.
    """

    index: int
    orientation: int | None = None

    @property
    def width_change(self) -> int:
        return 2

    def shifted(self, offset: int) -> "Cup":
        return Cup(self.index + offset, self.orientation)


@final
@dataclass(frozen=True)
class Cap:
    """A maximum joining the strands at positions `index` and `index + 1`."""

    index: int

    @property
    def width_change(self) -> int:
        return -2

    def shifted(self, offset: int) -> "Cap":
        return Cap(self.index + offset)


type Slice = Crossing | Cup | Cap
