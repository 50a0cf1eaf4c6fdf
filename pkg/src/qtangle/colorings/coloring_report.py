from typing import Final, Self

from pydantic import BaseModel, ConfigDict

from qtangle.colorings.coloring_enumerator import enumerate_colorings
from qtangle.presentations.quandle_presentation import QuandlePresentation
from qtangle.quandles.finite_quandle import FiniteQuandle

DEFAULT_LISTING_THRESHOLD: Final = 64


class QuandleSummary(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    name: str
    size: int


class ColoringReport(BaseModel):
    """The colorings of a presentation by a finite quandle, as written by `qtangle color`.

    `colorings` is `None` when the count exceeds the listing threshold.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    quandle: QuandleSummary
    generators: list[str]
    count: int
    truncated: bool = False
    colorings: list[list[int]] | None = None

    @classmethod
    def build(
        cls,
        presentation: QuandlePresentation,
        quandle: FiniteQuandle,
        limit: int | None = None,
        listing_threshold: int = DEFAULT_LISTING_THRESHOLD,
    ) -> Self:
        enumeration = enumerate_colorings(presentation, quandle, limit)
        listed = (
            [list(coloring.values()) for coloring in enumeration.colorings]
            if enumeration.count <= listing_threshold
            else None
        )
        return cls(
            quandle=QuandleSummary(name=quandle.name, size=quandle.size),
            generators=list(presentation.generators),
            count=enumeration.count,
            truncated=enumeration.truncated,
            colorings=listed,
        )

    def to_text(self) -> str:
        lines = [
            f"quandle: {self.quandle.name} ({self.quandle.size} elements)",
            f"generators: {' '.join(self.generators)}".rstrip(),
            f"count: {self.count}{' (truncated)' if self.truncated else ''}",
        ]

        if self.colorings is None:
            lines.append("colorings: not listed")
        else:
            lines.extend(
                " ".join(
                    f"{name}={value}"
                    for name, value in zip(self.generators, coloring, strict=True)
                )
                for coloring in self.colorings
            )

        return "\n".join(lines) + "\n"


def coloring_report(
    presentation: QuandlePresentation,
    quandle: FiniteQuandle,
    limit: int | None = None,
    listing_threshold: int = DEFAULT_LISTING_THRESHOLD,
) -> ColoringReport:
    return ColoringReport.build(presentation, quandle, limit, listing_threshold)
