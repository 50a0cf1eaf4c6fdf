import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from itertools import islice
from typing import final

from qtangle.exceptions import UnassignedGeneratorError
from qtangle.presentations.bordered_morphism import BorderedMorphism
from qtangle.presentations.quandle_presentation import QuandlePresentation, Relation
from qtangle.quandles.finite_quandle import FiniteQuandle
from qtangle.quandles.quandle_term import (
    GeneratorTerm,
    OperationTerm,
    QuandleTerm,
    TermOperator,
    eval_term,
)

logger = logging.getLogger(__name__)


@final
@dataclass(frozen=True)
class Coloring:
    """A quandle homomorphism, given by the element assigned to each generator."""

    assignment: dict[str, int] = field(hash=False)

    def values(self) -> tuple[int, ...]:
        return tuple(self.assignment.values())

    def __getitem__(self, name: str) -> int:
        return self.assignment[name]


@final
@dataclass(frozen=True)
class ColoringEnumeration:
    colorings: tuple[Coloring, ...]
    truncated: bool = False

    @property
    def count(self) -> int:
        return len(self.colorings)


@final
@dataclass(frozen=True)
class _Step:
    """How the generator at one position of the declaration order gets its value."""

    forced_by: QuandleTerm | None
    skipped: Relation | None
    checks: tuple[Relation, ...]


@final
class _SearchPlan:
    def __init__(self, presentation: QuandlePresentation) -> None:
        self.generators = presentation.generators
        self.positions = {
            name: position for position, name in enumerate(self.generators)
        }
        checks: list[list[Relation]] = [[] for _ in self.generators]
        definitions: dict[str, list[tuple[QuandleTerm, Relation]]] = {}

        for relation in presentation.relations:
            last = max(self.positions[name] for name in relation.generators())
            checks[last].append(relation)

            sides = ((relation.lhs, relation.rhs), (relation.rhs, relation.lhs))

            for defined, term in sides:
                if isinstance(defined, GeneratorTerm):
                    definitions.setdefault(defined.name, []).append((term, relation))

        steps: list[_Step] = []

        for position, name in enumerate(self.generators):
            candidates = definitions.get(name, [])
            forced_by, skipped = self._defining_term(position, candidates)
            remaining = tuple(
                relation for relation in checks[position] if relation is not skipped
            )
            steps.append(_Step(forced_by, skipped, remaining))

        self.steps = tuple(steps)

    def _defining_term(
        self, position: int, candidates: Sequence[tuple[QuandleTerm, Relation]]
    ) -> tuple[QuandleTerm | None, Relation | None]:
        for term, relation in candidates:
            if all(self.positions[leaf] < position for leaf in term.generators()):
                return term, relation

        return None, None


def enumerate_colorings(
    presentation: QuandlePresentation,
    quandle: FiniteQuandle,
    limit: int | None = None,
) -> ColoringEnumeration:
    """List the colorings of a presentation by a finite quandle, in lexicographic order.

    Generators are assigned in declaration order. A generator defined by a relation
    over earlier generators is forced; any other branches over every element.
    With `limit`, at most that many colorings are returned and `truncated` tells
    whether more exist.
    """
    solutions = _solutions(_SearchPlan(presentation), quandle)
    values = (
        list(islice(solutions, limit + 1)) if limit is not None else list(solutions)
    )
    truncated = limit is not None and len(values) > limit

    if truncated:
        logger.warning("Stopped listing colorings by %s after %d", quandle.name, limit)
        values = values[:limit]

    generators = presentation.generators
    colorings = tuple(
        Coloring(dict(zip(generators, assignment, strict=True)))
        for assignment in values
    )
    return ColoringEnumeration(colorings, truncated)


def count_colorings(presentation: QuandlePresentation, quandle: FiniteQuandle) -> int:
    count = sum(1 for _ in _solutions(_SearchPlan(presentation), quandle))
    logger.debug(
        "%d colorings of %d generators by %s",
        count,
        presentation.generator_count,
        quandle.name,
    )
    return count


def endpoint_colors(
    coloring: Coloring, morphism: BorderedMorphism, quandle: FiniteQuandle
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Evaluate the boundary maps of a morphism under one of its colorings.

    Raises:
        UnassignedGeneratorError: The coloring does not assign a generator the maps use.

    """
    assignment = coloring.assignment
    bottom = tuple(eval_term(term, assignment, quandle) for term in morphism.map_bottom)
    top = tuple(eval_term(term, assignment, quandle) for term in morphism.map_top)
    return bottom, top


def _solutions(plan: _SearchPlan, quandle: FiniteQuandle) -> Iterator[tuple[int, ...]]:
    """Backtrack with a stack of choice iterators, one per assigned position."""
    depth = len(plan.steps)

    if depth == 0:
        yield ()
        return

    values: list[int] = []
    pending = [_choices(plan, values, quandle)]

    while pending:
        position = len(pending) - 1
        element = next(pending[-1], None)

        if element is None:
            pending.pop()

            if values:
                values.pop()

            continue

        values.append(element)

        if not _satisfies_checks(plan.steps[position], values, plan.positions, quandle):
            values.pop()
            continue

        if position + 1 == depth:
            yield tuple(values)
            values.pop()
            continue

        pending.append(_choices(plan, values, quandle))


def _choices(
    plan: _SearchPlan, values: list[int], quandle: FiniteQuandle
) -> Iterator[int]:
    step = plan.steps[len(values)]

    if step.forced_by is None:
        return iter(range(quandle.size))

    return iter((_evaluate(step.forced_by, values, plan.positions, quandle, {}),))


def _satisfies_checks(
    step: _Step, values: list[int], positions: dict[str, int], quandle: FiniteQuandle
) -> bool:
    cache: dict[int, int] = {}
    return all(
        _evaluate(relation.lhs, values, positions, quandle, cache)
        == _evaluate(relation.rhs, values, positions, quandle, cache)
        for relation in step.checks
    )


def _evaluate(
    term: QuandleTerm,
    values: list[int],
    positions: dict[str, int],
    quandle: FiniteQuandle,
    cache: dict[int, int],
) -> int:
    """Evaluate a term whose generators are all assigned, each shared subterm once."""
    match term:
        case GeneratorTerm(name=name):
            position = positions[name]

            if position >= len(values):
                raise UnassignedGeneratorError(name)

            return values[position]
        case OperationTerm(left=left, operator=operator, right=right):
            key = id(term)

            if key not in cache:
                x = _evaluate(left, values, positions, quandle, cache)
                y = _evaluate(right, values, positions, quandle, cache)
                rows = (
                    quandle.rows
                    if operator is TermOperator.TRIANGLE
                    else quandle.inverse_rows
                )
                cache[key] = rows[x][y]

            return cache[key]
        case _:
            error_message = f"Unsupported term node {term!r}"
            raise TypeError(error_message)
