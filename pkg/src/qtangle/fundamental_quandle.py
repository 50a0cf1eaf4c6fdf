"""The fundamental quandle functor on oriented tangle diagrams."""

import logging
from collections.abc import Iterable

from qtangle.colorings.coloring_enumerator import count_colorings
from qtangle.presentations.amalgamation import amalgamate
from qtangle.presentations.bordered_morphism import (
    BorderedMorphism,
    CapEvent,
    CrossingEvent,
    SweepEvent,
    SweepRecord,
)
from qtangle.presentations.quandle_presentation import QuandlePresentation, Relation
from qtangle.quandles.finite_quandle import FiniteQuandle
from qtangle.quandles.quandle_registry import standard_quandles
from qtangle.quandles.quandle_term import GeneratorTerm, QuandleTerm
from qtangle.tangles.slices import Cap, Crossing, CrossingKind, Cup
from qtangle.tangles.tangle_diagram import TangleDiagram
from qtangle.tangles.tangle_operations import compose

logger = logging.getLogger(__name__)


def crossing_exponent(kind: CrossingKind, over_sign: int) -> int:
    """Return `e` such that the new under-arc is `old ▷^e over`."""
    return over_sign if kind is CrossingKind.POSITIVE else -over_sign


def bq(diagram: TangleDiagram, prefix: str = "g") -> BorderedMorphism:
    """Sweep a diagram from bottom to top and return its presentation with boundary maps.

    Every bottom strand and every cup starts a fresh arc `g<k>`. At a crossing the
    under-strand starts a fresh arc related to the arc it leaves and the over-arc;
    at a cap the two arcs that meet are identified.
    """
    counter = 0
    generators: list[str] = []

    def fresh() -> str:
        nonlocal counter
        counter += 1
        name = f"{prefix}{counter}"
        generators.append(name)
        return name

    labels = [fresh() for _ in diagram.bottom]
    map_bottom: tuple[QuandleTerm, ...] = tuple(map(GeneratorTerm, labels))
    relations: list[Relation] = []
    events: list[SweepEvent] = []

    for position, item in enumerate(diagram.slices):
        signs = diagram.level_signs[position]

        match item:
            case Crossing(index=index, kind=kind):
                over_position = index if kind is CrossingKind.POSITIVE else index + 1
                under_position = index + 1 if kind is CrossingKind.POSITIVE else index
                over, old = labels[over_position], labels[under_position]
                exponent = crossing_exponent(kind, signs[over_position])
                new = fresh()
                acted = GeneratorTerm(old).act(GeneratorTerm(over), exponent)
                relations.append(Relation(acted, GeneratorTerm(new)))
                events.append(CrossingEvent(old, new, over, exponent))
                # the two strands trade places
                labels[under_position], labels[over_position] = over, new
            case Cup(index=index):
                arc = fresh()
                labels[index:index] = [arc, arc]
            case Cap(index=index):
                left, right = labels[index], labels[index + 1]
                relations.append(Relation(GeneratorTerm(left), GeneratorTerm(right)))
                events.append(CapEvent(left, right))
                del labels[index : index + 2]

    morphism = BorderedMorphism(
        diagram.bottom,
        diagram.top,
        QuandlePresentation(tuple(generators), tuple(relations)),
        map_bottom,
        tuple(GeneratorTerm(label) for label in labels),
        SweepRecord(tuple(events), tuple(generators)),
    )
    logger.debug(
        "Swept a (%d,%d)-tangle into %d generators and %d relations",
        len(diagram.bottom),
        len(diagram.top),
        len(generators),
        len(relations),
    )
    return morphism


def bq_compose_check(
    first: TangleDiagram,
    second: TangleDiagram,
    quandles: Iterable[FiniteQuandle] | None = None,
) -> bool:
    """Compare the amalgamated product of two sweeps with the sweep of the stacked diagram.

    Raises:
        BoundaryMismatchError: The diagrams are not composable.

    """
    stacked = bq(compose(first, second)).presentation
    amalgamated = amalgamate(bq(first), bq(second)).presentation

    for quandle in quandles if quandles is not None else standard_quandles():
        stacked_count = count_colorings(stacked, quandle)
        amalgamated_count = count_colorings(amalgamated, quandle)

        if stacked_count != amalgamated_count:
            logger.info(
                "Composition changes the %s count: %d stacked, %d amalgamated",
                quandle.name,
                stacked_count,
                amalgamated_count,
            )
            return False

    return True
