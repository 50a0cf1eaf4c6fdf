import logging
from collections.abc import Sequence

from qtangle.exceptions import (
    BoundaryMismatchError,
    IllegalSignPatternError,
    SignConventionError,
)
from qtangle.presentations.bordered_morphism import BorderedMorphism
from qtangle.presentations.quandle_presentation import (
    QuandlePresentation,
    Relation,
    fresh_renaming,
)
from qtangle.presentations.tietze import DEFAULT_BUDGET, tietze_simplify
from qtangle.quandles.quandle_term import QuandleTerm
from qtangle.tangles.signed_boundary import SignedBoundary

logger = logging.getLogger(__name__)


def classical_closure(
    morphism: BorderedMorphism, *, simplify: bool = True, budget: int = DEFAULT_BUDGET
) -> QuandlePresentation:
    """Close a `(φ, φ)`-morphism by identifying each bottom image with the matching top image.

    Raises:
        BoundaryMismatchError: The bottom and top boundaries differ.

    """
    if morphism.bottom != morphism.top:
        raise BoundaryMismatchError(morphism.bottom.signs, morphism.top.signs)

    gluing = tuple(
        Relation(lower, upper)
        for lower, upper in zip(morphism.map_bottom, morphism.map_top, strict=True)
    )
    closed = morphism.presentation.with_relations(gluing)
    return _finish("classical closure", closed, simplify, budget)


def plat_closure(
    morphism: BorderedMorphism, *, simplify: bool = True, budget: int = DEFAULT_BUDGET
) -> QuandlePresentation:
    """Close a morphism by pairing consecutive bottom points and consecutive top points.

    Raises:
        IllegalSignPatternError: A boundary is not of the form `(s1, -s1, s2, -s2, ...)`.

    """
    gluing: list[Relation] = []

    for boundary, images in _boundaries(morphism):
        if not _is_plat_pattern(boundary):
            raise IllegalSignPatternError(boundary.signs, "plat closure")

        gluing.extend(
            Relation(images[position], images[position + 1])
            for position in range(0, len(images), 2)
        )

    closed = morphism.presentation.with_relations(gluing)
    return _finish("plat closure", closed, simplify, budget)


def periodic_link(
    morphism: BorderedMorphism,
    period: int,
    *,
    simplify: bool = True,
    budget: int = DEFAULT_BUDGET,
) -> QuandlePresentation:
    """Close `period` copies of a `(φ, φ)`-morphism in a cycle.

    Copy `z` has its generators suffixed by `_z`, and the top image of copy `z`
    is identified with the bottom image of copy `z + 1` (mod `period`).

    Raises:
        BoundaryMismatchError: The bottom and top boundaries differ.

    """
    if morphism.bottom != morphism.top:
        raise BoundaryMismatchError(morphism.bottom.signs, morphism.top.signs)

    if period < 1:
        error_message = f"The period must be at least 1, got {period}"
        raise ValueError(error_message)

    generators = morphism.presentation.generators
    copies = [
        morphism.rename({name: f"{name}_{copy}" for name in generators})
        for copy in range(1, period + 1)
    ]
    presentation = QuandlePresentation()

    for copy in copies:
        presentation = presentation.union(copy.presentation)

    gluing = tuple(
        Relation(upper, lower)
        for position, copy in enumerate(copies)
        for upper, lower in zip(
            copy.map_top, copies[(position + 1) % period].map_bottom, strict=True
        )
    )
    closed = presentation.with_relations(gluing)
    return _finish(f"periodic link of period {period}", closed, simplify, budget)


def connected_sum(
    first: BorderedMorphism,
    second: BorderedMorphism,
    *,
    simplify: bool = True,
    budget: int = DEFAULT_BUDGET,
) -> QuandlePresentation:
    """Join two `(1,1)`-morphisms end to end into a composite knot.

    `first` must be oriented downward and `second` upward. The two presentations are
    joined with `top₁ = top₂` and `bottom₁ = bottom₂`.

    Raises:
        BoundaryMismatchError: A morphism has different bottom and top boundaries.
        SignConventionError: The orientations are not `(-)` and `(+)`.

    """
    for morphism, expected in ((first, (-1,)), (second, (1,))):
        if morphism.bottom != morphism.top:
            raise BoundaryMismatchError(morphism.bottom.signs, morphism.top.signs)

        if morphism.bottom.signs != expected:
            raise SignConventionError(expected, morphism.bottom.signs)

    renamed = second.rename(
        fresh_renaming(first.presentation.generators, second.presentation.generators)
    )
    gluing = (
        Relation(first.map_top[0], renamed.map_top[0]),
        Relation(first.map_bottom[0], renamed.map_bottom[0]),
    )
    presentation = first.presentation.union(renamed.presentation).with_relations(gluing)
    return _finish("connected sum", presentation, simplify, budget)


def rainbow_closure(
    morphism: BorderedMorphism, *, simplify: bool = True, budget: int = DEFAULT_BUDGET
) -> QuandlePresentation:
    """Close a morphism whose boundaries admit a rainbow cup, joining point `h` with `2k - h + 1`.

    Raises:
        IllegalSignPatternError: A boundary does not satisfy `φ(p_h) = -φ(p_{2k-h+1})`.

    """
    gluing: list[Relation] = []

    for boundary, images in _boundaries(morphism):
        if len(boundary) % 2 != 0 or boundary != boundary.reversed_negated():
            raise IllegalSignPatternError(boundary.signs, "rainbow closure")

        gluing.extend(_rainbow_relations(images))

    closed = morphism.presentation.with_relations(gluing)
    return _finish("rainbow closure", closed, simplify, budget)


def _boundaries(
    morphism: BorderedMorphism,
) -> tuple[tuple[SignedBoundary, tuple[QuandleTerm, ...]], ...]:
    return (
        (morphism.bottom, morphism.map_bottom),
        (morphism.top, morphism.map_top),
    )


def _rainbow_relations(images: Sequence[QuandleTerm]) -> list[Relation]:
    width = len(images)
    return [
        Relation(images[position], images[width - 1 - position])
        for position in range(width // 2)
    ]


def _is_plat_pattern(boundary: SignedBoundary) -> bool:
    return len(boundary) % 2 == 0 and all(
        boundary[position] == -boundary[position + 1]
        for position in range(0, len(boundary), 2)
    )


def _finish(
    construction: str,
    presentation: QuandlePresentation,
    simplify: bool,  # noqa: FBT001
    budget: int,
) -> QuandlePresentation:
    if simplify:
        presentation = tietze_simplify(presentation, budget=budget).presentation

    logger.info(
        "Built the %s: %d generators, %d relations",
        construction,
        presentation.generator_count,
        presentation.relation_count,
    )
    return presentation
