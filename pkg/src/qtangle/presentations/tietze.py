import logging
from collections.abc import Collection, Sequence
from dataclasses import dataclass, field
from typing import Final, final

from qtangle.presentations.bordered_morphism import BorderedMorphism
from qtangle.presentations.quandle_presentation import QuandlePresentation, Relation
from qtangle.quandles.quandle_term import GeneratorTerm, QuandleTerm

logger = logging.getLogger(__name__)

DEFAULT_BUDGET: Final = 10_000


@final
@dataclass(frozen=True)
class SimplificationResult:
    """A simplified presentation and the term over surviving generators for each eliminated one."""

    presentation: QuandlePresentation
    log: dict[str, QuandleTerm] = field(default_factory=dict[str, QuandleTerm])
    budget_exhausted: bool = False

    @property
    def eliminated(self) -> tuple[str, ...]:
        return tuple(self.log)


def tietze_simplify(
    presentation: QuandlePresentation,
    protected: Collection[str] = frozenset(),
    budget: int = DEFAULT_BUDGET,
) -> SimplificationResult:
    """Eliminate generators that a relation defines in terms of the others.

    Reflexive relations `t = t` are dropped. The first generator in declaration
    order that is not protected and has a defining relation `g = t` or `t = g`
    with `g` absent from `t` is removed together with the first such relation,
    and `t` is substituted for it everywhere. This repeats until no generator can
    be eliminated or `budget` eliminations have been made.
    """
    generators = list(presentation.generators)
    relations = [
        relation for relation in presentation.relations if not relation.is_reflexive
    ]
    protected = frozenset(protected)
    log: dict[str, QuandleTerm] = {}
    budget_exhausted = False

    while True:
        candidate = _find_elimination(generators, relations, protected)

        if candidate is None:
            break

        if len(log) >= budget:
            budget_exhausted = True
            logger.warning(
                "Simplification stopped after %d eliminations with %d generators left",
                len(log),
                len(generators),
            )
            break

        name, position, replacement = candidate
        logger.debug("Eliminating %s := %s", name, replacement)
        substitution = {name: replacement}
        del relations[position]
        generators.remove(name)
        relations = [
            substituted
            for relation in relations
            if not (substituted := relation.substitute(substitution)).is_reflexive
        ]
        log = {
            eliminated: term.substitute(substitution)
            for eliminated, term in log.items()
        }
        log[name] = replacement

    simplified = QuandlePresentation(tuple(generators), tuple(relations))
    logger.info(
        "Simplified %d generators and %d relations to %d and %d",
        presentation.generator_count,
        presentation.relation_count,
        simplified.generator_count,
        simplified.relation_count,
    )
    return SimplificationResult(simplified, log, budget_exhausted)


def simplify_morphism(
    morphism: BorderedMorphism, budget: int = DEFAULT_BUDGET
) -> BorderedMorphism:
    """Simplify the presentation of a morphism, keeping every generator its boundary maps use."""
    result = tietze_simplify(
        morphism.presentation, morphism.boundary_generators(), budget
    )
    return morphism.with_presentation(result.presentation)


def _find_elimination(
    generators: Sequence[str],
    relations: Sequence[Relation],
    protected: frozenset[str],
) -> tuple[str, int, QuandleTerm] | None:
    for name in generators:
        if name in protected:
            continue

        target = GeneratorTerm(name)

        for position, relation in enumerate(relations):
            if relation.lhs == target and not relation.rhs.mentions(name):
                return name, position, relation.rhs

            if relation.rhs == target and not relation.lhs.mentions(name):
                return name, position, relation.lhs

    return None
