import logging
from collections.abc import Sequence

from qtangle.constructions.closures import connected_sum, rainbow_closure
from qtangle.exceptions import (
    BoundaryMismatchError,
    MissingSweepRecordError,
    SignConventionError,
)
from qtangle.presentations.amalgamation import tensor_morphisms
from qtangle.presentations.bordered_morphism import (
    BorderedMorphism,
    CapEvent,
    CrossingEvent,
)
from qtangle.presentations.quandle_presentation import QuandlePresentation, Relation
from qtangle.presentations.tietze import DEFAULT_BUDGET, simplify_morphism
from qtangle.quandles.quandle_term import GeneratorTerm, QuandleTerm
from qtangle.tangles.cabling import copy_at, expand_signs
from qtangle.tangles.signed_boundary import SignedBoundary

logger = logging.getLogger(__name__)


def copy_name(name: str, copy: int) -> str:
    """Return the name of the 1-based `copy` of an arc."""
    return f"{name}_{copy}"


def cable_presentation(
    morphism: BorderedMorphism,
    epsilon: Sequence[int],
    *,
    simplify: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> BorderedMorphism:
    """Present the cable of a swept diagram directly from its crossing record.

    Every arc `g` becomes the copies `g_1..g_N`. A crossing `new = old ▷^e over`
    becomes, for every copy `j`, `new_j = (...(old_j ▷^{e·ε} over_m)...) ▷^{e·ε} over_m'`
    with the over-copies met in order `N..1` when `e = 1` and `1..N` when `e = -1`.
    A cap identifies the copies pairwise.

    Raises:
        MissingSweepRecordError: The morphism was not produced by sweeping a diagram.

    """
    if morphism.sweep is None:
        raise MissingSweepRecordError

    copies = len(epsilon)

    if copies < 1 or any(sign not in (1, -1) for sign in epsilon):
        error_message = (
            f"A cable needs at least one copy with signs +1 or -1, got {tuple(epsilon)}"
        )
        raise ValueError(error_message)

    generators = tuple(
        copy_name(name, copy)
        for name in morphism.sweep.generators
        for copy in range(1, copies + 1)
    )
    relations: list[Relation] = []

    for event in morphism.sweep.events:
        match event:
            case CrossingEvent(
                under_old=old, under_new=new, over=over, exponent=exponent
            ):
                order = (
                    range(copies, 0, -1) if exponent > 0 else range(1, copies + 1)
                )

                for copy in range(1, copies + 1):
                    term: QuandleTerm = GeneratorTerm(copy_name(old, copy))

                    for over_copy in order:
                        term = term.act(
                            GeneratorTerm(copy_name(over, over_copy)),
                            exponent * epsilon[over_copy - 1],
                        )

                    relations.append(
                        Relation(term, GeneratorTerm(copy_name(new, copy)))
                    )
            case CapEvent(left=left, right=right):
                relations.extend(
                    Relation(
                        GeneratorTerm(copy_name(left, copy)),
                        GeneratorTerm(copy_name(right, copy)),
                    )
                    for copy in range(1, copies + 1)
                )

    cabled = BorderedMorphism(
        expand_signs(morphism.bottom, epsilon),
        expand_signs(morphism.top, epsilon),
        QuandlePresentation(generators, tuple(relations)),
        _expand_images(morphism.bottom, morphism.map_bottom, copies),
        _expand_images(morphism.top, morphism.map_top, copies),
    )
    logger.info(
        "Cabled %d arcs into %d copies each: %d relations",
        len(morphism.sweep.generators),
        copies,
        len(relations),
    )
    return simplify_morphism(cabled, budget) if simplify else cabled


def satellite(
    embellishment: BorderedMorphism,
    companion: BorderedMorphism,
    epsilon: Sequence[int],
    *,
    simplify: bool = True,
    budget: int = DEFAULT_BUDGET,
) -> QuandlePresentation:
    """Present the satellite with pattern `embellishment` around the knot closing `companion`.

    The companion `(1,1)`-tangle is cabled with `epsilon`, placed to the right of
    the embellishment, and the two are closed by a rainbow of cups and caps. The
    cable boundary `ψ` must satisfy `ψ(p_{k-i+1}) = -φ(p_i)`.

    Raises:
        BoundaryMismatchError: A morphism has different bottom and top boundaries, or the companion is not a `(1,1)`-morphism.
        SignConventionError: The cabled boundary does not match the embellishment.

    """
    for morphism in (embellishment, companion):
        if morphism.bottom != morphism.top:
            raise BoundaryMismatchError(morphism.bottom.signs, morphism.top.signs)

    if companion.shape != (1, 1):
        raise BoundaryMismatchError((1,), companion.bottom.signs)

    phi = embellishment.bottom
    cabled = cable_presentation(companion, epsilon)
    expected = phi.reversed_negated()

    if cabled.bottom != expected:
        raise SignConventionError(expected.signs, cabled.bottom.signs)

    if phi.signs == (-1,):
        return connected_sum(embellishment, cabled, simplify=simplify, budget=budget)

    combined = tensor_morphisms(embellishment, cabled)
    return rainbow_closure(combined, simplify=simplify, budget=budget)


def _expand_images(
    boundary: SignedBoundary, images: Sequence[QuandleTerm], copies: int
) -> tuple[QuandleTerm, ...]:
    expanded: list[QuandleTerm] = []

    for sign, term in zip(boundary, images, strict=True):
        for offset in range(copies):
            copy = copy_at(sign, offset, copies) + 1
            expanded.append(
                term.substitute(
                    {
                        name: GeneratorTerm(copy_name(name, copy))
                        for name in term.generators()
                    }
                )
            )

    return tuple(expanded)
