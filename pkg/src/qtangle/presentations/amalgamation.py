import logging

from qtangle.exceptions import BoundaryMismatchError
from qtangle.presentations.bordered_morphism import BorderedMorphism
from qtangle.presentations.quandle_presentation import Relation, fresh_renaming

logger = logging.getLogger(__name__)


def amalgamate_with_renaming(
    first: BorderedMorphism, second: BorderedMorphism
) -> tuple[BorderedMorphism, dict[str, str]]:
    """Compose two morphisms by the amalgamated product over their shared boundary.

    The generators of `second` that collide with those of `first` are renamed, and
    the renaming is returned with the composite. The relations are those of both
    factors followed by `first.map_top[j] = second.map_bottom[j]` for every shared
    point `j`.

    Raises:
        BoundaryMismatchError: `first.top` and `second.bottom` differ.

    """
    if first.top != second.bottom:
        raise BoundaryMismatchError(first.top.signs, second.bottom.signs)

    renaming = fresh_renaming(
        first.presentation.generators, second.presentation.generators
    )
    renamed = second.rename(renaming)
    gluing = tuple(
        Relation(upper, lower)
        for upper, lower in zip(first.map_top, renamed.map_bottom, strict=True)
    )
    presentation = first.presentation.union(renamed.presentation).with_relations(gluing)
    logger.debug(
        "Amalgamated %d and %d generators over %d boundary points",
        first.presentation.generator_count,
        renamed.presentation.generator_count,
        len(gluing),
    )
    composite = BorderedMorphism(
        first.bottom, renamed.top, presentation, first.map_bottom, renamed.map_top
    )
    return composite, renaming


def amalgamate(first: BorderedMorphism, second: BorderedMorphism) -> BorderedMorphism:
    composite, _ = amalgamate_with_renaming(first, second)
    return composite


def tensor_morphisms(
    first: BorderedMorphism, second: BorderedMorphism
) -> BorderedMorphism:
    """Juxtapose two morphisms: free product with concatenated boundary maps."""
    renaming = fresh_renaming(
        first.presentation.generators, second.presentation.generators
    )
    renamed = second.rename(renaming)
    sweep = (
        first.sweep + renamed.sweep
        if first.sweep is not None and renamed.sweep is not None
        else None
    )
    return BorderedMorphism(
        first.bottom + renamed.bottom,
        first.top + renamed.top,
        first.presentation.union(renamed.presentation),
        first.map_bottom + renamed.map_bottom,
        first.map_top + renamed.map_top,
        sweep,
    )
