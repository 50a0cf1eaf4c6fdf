import logging
import random
from collections.abc import Callable, Iterable, Iterator, Mapping, Sequence
from itertools import product
from types import MappingProxyType
from typing import Final

import numpy as np

from qtangle.colorings.coloring_enumerator import (
    count_colorings,
    endpoint_colors,
    enumerate_colorings,
)
from qtangle.configuration.qtangle_settings import QtangleSettings
from qtangle.constructions.braid_action import BraidAutomorphism, braid_action
from qtangle.constructions.cables import cable_presentation, satellite
from qtangle.constructions.closures import (
    classical_closure,
    connected_sum,
    periodic_link,
    plat_closure,
)
from qtangle.corpus import (
    COMPOSABLE_PAIRS,
    COMPOSABLE_TRIPLES,
    DIAGRAM_SOURCES,
    KNOT_TANGLES,
    PRESENTATION_SOURCES,
    REIDEMEISTER_PAIRS,
    corpus_diagram,
    fixture_morphism,
    fixture_presentation,
)
from qtangle.exceptions import LocatedError, QuandleAxiom, QuandleAxiomError
from qtangle.fundamental_quandle import bq, bq_compose_check
from qtangle.presentations.amalgamation import amalgamate, tensor_morphisms
from qtangle.presentations.bordered_morphism import (
    BorderedMorphism,
    cup_morphism,
    identity_morphism,
    reverse_morphism,
)
from qtangle.presentations.quandle_presentation import QuandlePresentation
from qtangle.presentations.tietze import tietze_simplify
from qtangle.quandles.finite_quandle import (
    FiniteQuandle,
    OperationTable,
    conjugation_quandle_sym3,
    dihedral_quandle,
    is_connected,
    is_faithful,
    validate_quandle,
)
from qtangle.quandles.free_group_word import FreeGroupWord
from qtangle.quandles.free_quandle import FreeQuandleElement, fq_op
from qtangle.quandles.quandle_registry import standard_quandles
from qtangle.tangles.cabling import cable_diagram
from qtangle.tangles.named_tangles import (
    closure_diagram,
    cup,
    plat_closure_diagram,
    trivial,
)
from qtangle.tangles.slices import Cap, Crossing, CrossingKind, Cup, Slice
from qtangle.tangles.tangle_diagram import TangleDiagram
from qtangle.tangles.tangle_operations import compose, negate, reverse, tensor
from qtangle.verification.check_result import CheckResult

logger = logging.getLogger(__name__)

type Suite = Callable[[QtangleSettings], list[CheckResult]]

MAX_CHECKED_ORDER: Final = 12
MUTATION_COUNT: Final = 20
CABLE_SIGNS: Final = ((1,), (-1,), (1, 1), (1, -1))
MAX_PERIOD: Final = 4
PERIODIC_PATTERNS: Final = ("cable-pattern", "braid-mixed")
TENSOR_PAIRS: Final = (
    ("trefoil", "kink"),
    ("clasp", "r2-twist"),
    ("cup-pair", "trefoil"),
)
TENSOR_TRIPLES: Final = (
    ("trefoil", "clasp", "cup-pair"),
    ("cap-pair", "pretzel", "kink"),
)
FREE_GENERATORS: Final = ("a", "b", "c")
MAX_TAIL_LENGTH: Final = 4
MAX_RANDOM_WIDTH: Final = 4
MAX_RANDOM_SLICES: Final = 8


def run_suite(name: str, settings: QtangleSettings) -> list[CheckResult]:
    """Run one named suite, or every suite in order for `all`.

    Raises:
        KeyError: No suite has this name.

    """
    if name == "all":
        return [result for suite in SUITES.values() for result in suite(settings)]

    return SUITES[name](settings)


def suite_names() -> tuple[str, ...]:
    return (*SUITES, "all")


def check_axioms(settings: QtangleSettings) -> list[CheckResult]:
    results = [
        _accepts(dihedral_quandle(order)) for order in range(1, MAX_CHECKED_ORDER + 1)
    ]
    results.append(_accepts(conjugation_quandle_sym3()))

    for quandle, x, y, value in _mutations(settings.seed):
        mutated = quandle.table.copy()
        mutated[x, y] = value
        expected = (
            QuandleAxiom.IDEMPOTENCY if x == y else QuandleAxiom.RIGHT_INVERTIBILITY
        )
        name = f"{quandle.name} with ({x}, {y}) set to {value} is rejected"

        try:
            validate_quandle(mutated)
        except QuandleAxiomError as error:
            passed = error.axiom is expected and _witnesses(
                mutated, error.axiom, error.witness
            )
            detail = f"axiom {error.axiom.value}"
            results.append(_check("axioms", name, passed=passed, detail=detail))
        else:
            results.append(_check("axioms", name, passed=False, detail="accepted"))

    return results


def check_predicates(settings: QtangleSettings) -> list[CheckResult]:  # noqa: ARG001
    results: list[CheckResult] = []

    for order in range(1, MAX_CHECKED_ORDER + 1):
        quandle = dihedral_quandle(order)
        odd = order % 2 == 1
        results.append(
            _check(
                "predicates",
                f"{quandle.name} is connected iff odd",
                passed=is_connected(quandle) == odd,
            )
        )
        results.append(
            _check(
                "predicates",
                f"{quandle.name} is faithful iff odd",
                passed=is_faithful(quandle) == odd,
            )
        )

    sym3 = conjugation_quandle_sym3()
    results.append(
        _check(
            "predicates",
            f"{sym3.name} is faithful and not connected",
            passed=is_faithful(sym3) and not is_connected(sym3),
        )
    )
    return results


def check_counts(settings: QtangleSettings) -> list[CheckResult]:
    budget = settings.simplification_budget
    d3, _, d5, _ = standard_quandles()
    results = [
        _equal(
            "counts",
            "trefoil by dihedral:3",
            _closure_count("trefoil", d3, budget),
            9,
        ),
        _equal(
            "counts",
            "figure-eight by dihedral:5",
            _closure_count("figure-eight", d5, budget),
            25,
        ),
    ]

    for quandle in standard_quandles():
        for name, components in (("unknot", 1), ("unlink-2", 2), ("unlink-3", 3)):
            results.append(
                _equal(
                    "counts",
                    f"{name} by {quandle.name}",
                    _closure_count(name, quandle, budget),
                    quandle.size**components,
                )
            )

    return results


def check_functoriality(settings: QtangleSettings) -> list[CheckResult]:  # noqa: ARG001
    return [
        _check(
            "functoriality",
            f"{first} then {second}",
            passed=bq_compose_check(corpus_diagram(first), corpus_diagram(second)),
        )
        for first, second in COMPOSABLE_PAIRS
    ]


def check_reidemeister(settings: QtangleSettings) -> list[CheckResult]:
    budget = settings.simplification_budget
    return [
        _equal(
            "reidemeister",
            f"{first} against {second}",
            _counts(classical_closure(bq(corpus_diagram(first)), budget=budget)),
            _counts(classical_closure(bq(corpus_diagram(second)), budget=budget)),
        )
        for first, second in REIDEMEISTER_PAIRS
    ]


def check_fixtures(settings: QtangleSettings) -> list[CheckResult]:
    budget = settings.simplification_budget
    pretzel = periodic_link(bq(corpus_diagram("pretzel")), 3, budget=budget)
    granny = _granny(budget)
    cable = _figure_eight_cable(budget)
    double = _trefoil_double(budget)
    expected = {
        "pretzel-periodic-reduced": pretzel,
        "granny-trefoils": granny,
        "granny-reduced": granny,
        "figure-eight-cable": cable,
        "figure-eight-cable-reduced": cable,
        "trefoil-double": double,
        "trefoil-double-reduced": double,
    }
    literal = periodic_link(fixture_morphism("pretzel-tangle"), 3, budget=budget)
    results = [
        _equal(
            "fixtures",
            "periodic closure of the literal pretzel tangle against the diagram",
            _counts(literal),
            _counts(pretzel),
        )
    ]
    results.extend(
        _equal(
            "fixtures",
            name,
            _counts(fixture_presentation(name)),
            _counts(constructed),
        )
        for name, constructed in expected.items()
    )
    return results


def check_lemmas(settings: QtangleSettings) -> list[CheckResult]:
    budget = settings.simplification_budget
    d3, _, d5, _ = standard_quandles()
    downward_trefoil = bq(negate(corpus_diagram("trefoil")))
    results: list[CheckResult] = []

    for quandle in (d3, d5):
        for name in ("trefoil", "figure-eight"):
            joined = connected_sum(
                downward_trefoil, bq(corpus_diagram(name)), budget=budget
            )
            results.append(
                _equal(
                    "lemmas",
                    f"trefoil sum {name} by {quandle.name}",
                    quandle.size * count_colorings(joined, quandle),
                    _closure_count("trefoil", quandle, budget)
                    * _closure_count(name, quandle, budget),
                )
            )

    results.append(
        _equal(
            "lemmas",
            "granny by dihedral:3",
            count_colorings(_granny(budget), d3),
            27,
        )
    )

    for quandle in (d3, d5):
        for name in KNOT_TANGLES:
            morphism = bq(corpus_diagram(name))
            colorings = enumerate_colorings(morphism.presentation, quandle).colorings
            endpoints = (
                endpoint_colors(coloring, morphism, quandle) for coloring in colorings
            )
            passed = all(bottom == top for bottom, top in endpoints)
            results.append(
                _check(
                    "lemmas",
                    f"endpoints of {name} agree under {quandle.name}",
                    passed=passed,
                )
            )

    for name in DIAGRAM_SOURCES:
        diagram = corpus_diagram(name)

        if diagram.bottom == diagram.top:
            results.append(
                _equal(
                    "lemmas",
                    f"closure of {name} with every orientation reversed",
                    _counts(classical_closure(bq(negate(diagram)), budget=budget)),
                    _counts(classical_closure(bq(diagram), budget=budget)),
                )
            )

    return results


def check_cables(settings: QtangleSettings) -> list[CheckResult]:
    budget = settings.simplification_budget
    results: list[CheckResult] = []

    for name in ("trefoil", "figure-eight"):
        diagram = corpus_diagram(name)
        morphism = bq(diagram)

        for epsilon in CABLE_SIGNS:
            direct = cable_presentation(morphism, epsilon)
            drawn = bq(cable_diagram(diagram, len(epsilon), epsilon))
            label = f"{name} cabled with {epsilon}"
            results.append(
                _equal(
                    "cables",
                    label,
                    _counts(direct.presentation),
                    _counts(drawn.presentation),
                )
            )
            results.append(
                _equal(
                    "cables",
                    f"closure of {label}",
                    _counts(classical_closure(direct, budget=budget)),
                    _counts(classical_closure(drawn, budget=budget)),
                )
            )

    return results


def check_routes(settings: QtangleSettings) -> list[CheckResult]:
    budget = settings.simplification_budget
    results: list[CheckResult] = []

    for name in DIAGRAM_SOURCES:
        diagram = corpus_diagram(name)

        if diagram.bottom == diagram.top:
            results.append(
                _equal(
                    "routes",
                    f"closure of {name}",
                    _counts(classical_closure(bq(diagram), budget=budget)),
                    _counts(bq(closure_diagram(diagram)).presentation),
                )
            )

        results.append(
            _equal(
                "routes",
                f"reverse of {name}",
                _counts(reverse_morphism(bq(diagram)).presentation),
                _counts(bq(reverse(diagram)).presentation),
            )
        )

    plat_trefoil = corpus_diagram("plat-trefoil")
    results.append(
        _equal(
            "routes",
            "plat closure of plat-trefoil",
            _counts(plat_closure(bq(plat_trefoil), budget=budget)),
            _counts(bq(plat_closure_diagram(plat_trefoil)).presentation),
        )
    )
    results.append(
        _equal(
            "routes",
            "plat closure of plat-trefoil against the trefoil",
            _counts(plat_closure(bq(plat_trefoil), budget=budget)),
            _counts(classical_closure(bq(corpus_diagram("trefoil")), budget=budget)),
        )
    )

    for name in PERIODIC_PATTERNS:
        morphism = bq(corpus_diagram(name))

        for period, chain in enumerate(_chains(morphism, MAX_PERIOD), start=1):
            results.append(
                _equal(
                    "routes",
                    f"periodic link of {name} with period {period}",
                    _counts(periodic_link(morphism, period, budget=budget)),
                    _counts(classical_closure(chain, budget=budget)),
                )
            )

    results.append(
        _equal(
            "routes",
            "periodic pretzel link against the drawn P(3,3,3)",
            _counts(periodic_link(bq(corpus_diagram("pretzel")), 3, budget=budget)),
            _counts(bq(corpus_diagram("pretzel-333")).presentation),
        )
    )

    for signs in ((1, -1), (-1, 1), (1, 1, -1, -1), (1, -1, 1, -1)):
        results.append(
            _equal(
                "routes",
                f"cup tangle {signs}",
                _counts(cup_morphism(signs).presentation),
                _counts(bq(cup(signs)).presentation),
            )
        )

    return results


def check_braids(settings: QtangleSettings) -> list[CheckResult]:
    results = [
        _check(
            "braids",
            "s1 s2 s1 = s2 s1 s2",
            passed=braid_action((1, 2, 1), 3) == braid_action((2, 1, 2), 3),
        ),
        _check(
            "braids",
            "s1 s3 = s3 s1",
            passed=braid_action((1, 3), 4) == braid_action((3, 1), 4),
        ),
        _check(
            "braids",
            "s1 is not the identity",
            passed=not braid_action((1,), 2).is_identity,
        ),
        _check(
            "braids",
            "s1 s1^-1 is the identity",
            passed=braid_action((1, -1), 2).is_identity,
        ),
    ]
    generator = random.Random(settings.seed)
    homomorphic = 0

    for _ in range(settings.random_pairs):
        strands = generator.randint(2, 4)
        first = _random_word(generator, strands)
        second = _random_word(generator, strands)
        combined = braid_action((*first, *second), strands)
        chained = braid_action(first, strands).then(braid_action(second, strands))

        if combined == chained:
            homomorphic += 1
        else:
            logger.info("Braid action is not homomorphic on %s and %s", first, second)

    results.append(
        _check(
            "braids",
            "action of a product is the composite action",
            passed=homomorphic == settings.random_pairs,
            detail=f"{homomorphic}/{settings.random_pairs} random pairs",
        )
    )
    results.append(
        _check(
            "braids",
            "identity braid acts trivially",
            passed=braid_action((), 3) == BraidAutomorphism.identity(3),
        )
    )
    return results


def check_tietze(settings: QtangleSettings) -> list[CheckResult]:
    budget = settings.simplification_budget
    return [
        _equal(
            "tietze",
            name,
            _counts(presentation),
            _counts(tietze_simplify(presentation, budget=budget).presentation),
        )
        for name, presentation in _generated_presentations()
    ]


def check_laws(settings: QtangleSettings) -> list[CheckResult]:
    """Algebraic laws of diagrams, bordered morphisms and the free quandle."""
    results = [*_diagram_laws(), *_morphism_laws()]
    results.append(
        _check(
            "laws",
            "every corpus sweep starts one arc per bottom point, cup and crossing",
            passed=all(
                _sweeps_fresh_arcs(corpus_diagram(name)) for name in DIAGRAM_SOURCES
            ),
        )
    )
    results.extend(_random_stacks(settings))
    results.append(_free_quandle_axioms(settings))
    return results


SUITES: Final[Mapping[str, Suite]] = MappingProxyType(
    {
        "axioms": check_axioms,
        "predicates": check_predicates,
        "counts": check_counts,
        "functoriality": check_functoriality,
        "reidemeister": check_reidemeister,
        "fixtures": check_fixtures,
        "lemmas": check_lemmas,
        "cables": check_cables,
        "routes": check_routes,
        "braids": check_braids,
        "tietze": check_tietze,
        "laws": check_laws,
    }
)


def _check(suite: str, name: str, *, passed: bool, detail: str = "") -> CheckResult:
    logger.info("%s %s: %s", "Passed" if passed else "Failed", suite, name)
    return CheckResult(suite=suite, name=name, passed=passed, detail=detail)


def _equal[T](suite: str, name: str, actual: T, expected: T) -> CheckResult:
    detail = f"{actual} vs {expected}"
    return _check(suite, name, passed=actual == expected, detail=detail)


def _counts(
    presentation: QuandlePresentation, quandles: Iterable[FiniteQuandle] | None = None
) -> tuple[int, ...]:
    targets = standard_quandles() if quandles is None else quandles
    return tuple(count_colorings(presentation, quandle) for quandle in targets)


def _closure_count(name: str, quandle: FiniteQuandle, budget: int) -> int:
    closed = classical_closure(bq(corpus_diagram(name)), budget=budget)
    return count_colorings(closed, quandle)


def _granny(budget: int) -> QuandlePresentation:
    trefoil = corpus_diagram("trefoil")
    return connected_sum(bq(negate(trefoil)), bq(trefoil), budget=budget)


def _figure_eight_cable(budget: int) -> QuandlePresentation:
    return satellite(
        bq(corpus_diagram("cable-pattern")),
        bq(negate(corpus_diagram("figure-eight"))),
        (1, 1),
        budget=budget,
    )


def _trefoil_double(budget: int) -> QuandlePresentation:
    return satellite(
        bq(corpus_diagram("clasp")),
        bq(corpus_diagram("trefoil")),
        (1, -1),
        budget=budget,
    )


def _generated_presentations() -> Iterator[tuple[str, QuandlePresentation]]:
    for name in DIAGRAM_SOURCES:
        morphism = bq(corpus_diagram(name))
        yield f"sweep of {name}", morphism.presentation

        if morphism.bottom == morphism.top:
            yield f"closure of {name}", classical_closure(morphism, simplify=False)

    for name in PRESENTATION_SOURCES:
        yield name, fixture_presentation(name)

    for first, second in COMPOSABLE_PAIRS:
        amalgamated = amalgamate(bq(corpus_diagram(first)), bq(corpus_diagram(second)))
        yield f"amalgamated sweeps of {first} and {second}", amalgamated.presentation

    cabled = cable_presentation(bq(corpus_diagram("trefoil")), (1, -1))
    yield "trefoil cabled with (1, -1)", cabled.presentation
    yield (
        "pretzel periodic link",
        periodic_link(bq(corpus_diagram("pretzel")), 3, simplify=False),
    )


def _mutations(seed: int) -> Iterator[tuple[FiniteQuandle, int, int, int]]:
    """Every single-entry change of dihedral(3), then seeded changes of conj-sym3 up to the total."""
    dihedral = dihedral_quandle(3)
    changes = list(_single_entry_changes(dihedral))
    yield from changes

    sym3 = conjugation_quandle_sym3()
    yield from random.Random(seed).sample(
        list(_single_entry_changes(sym3)), MUTATION_COUNT - len(changes)
    )


def _single_entry_changes(
    quandle: FiniteQuandle,
) -> Iterator[tuple[FiniteQuandle, int, int, int]]:
    for x, y in product(range(quandle.size), repeat=2):
        for value in range(quandle.size):
            if value != quandle.op(x, y):
                yield quandle, x, y, value


def _witnesses(
    table: OperationTable, axiom: QuandleAxiom, witness: Sequence[int]
) -> bool:
    match axiom, tuple(witness):
        case QuandleAxiom.IDEMPOTENCY, (x,):
            return bool(table[x, x] != x)
        case QuandleAxiom.RIGHT_INVERTIBILITY, (first, second, y):
            return first != second and bool(table[first, y] == table[second, y])
        case QuandleAxiom.SELF_DISTRIBUTIVITY, (x, y, z):
            return bool(table[table[x, y], z] != table[table[x, z], table[y, z]])
        case _:
            return False


def _accepts(quandle: FiniteQuandle) -> CheckResult:
    name = f"{quandle.name} satisfies the axioms"

    try:
        validated = validate_quandle(np.array(quandle.rows), quandle.name)
    except QuandleAxiomError as error:
        return _check("axioms", name, passed=False, detail=str(error))

    return _check("axioms", name, passed=validated == quandle)


def _random_word(generator: random.Random, strands: int) -> tuple[int, ...]:
    return tuple(
        generator.choice((1, -1)) * generator.randint(1, strands - 1)
        for _ in range(generator.randint(1, 5))
    )


def _chains(morphism: BorderedMorphism, length: int) -> Iterator[BorderedMorphism]:
    """Yield the amalgamated products of 1, 2, ... `length` copies of a morphism."""
    chain = morphism
    yield chain

    for _ in range(length - 1):
        chain = amalgamate(chain, morphism)
        yield chain


def _diagram_laws() -> Iterator[CheckResult]:
    empty = TangleDiagram.empty()

    for first, second in COMPOSABLE_PAIRS:
        lower, upper = corpus_diagram(first), corpus_diagram(second)
        reversed_stack = compose(reverse(upper), reverse(lower))
        yield _check(
            "laws",
            f"reverse of {first} then {second}",
            passed=reverse(compose(lower, upper)) == reversed_stack,
        )

        for epsilon in CABLE_SIGNS:
            copies = len(epsilon)
            cabled_stack = compose(
                cable_diagram(lower, copies, epsilon),
                cable_diagram(upper, copies, epsilon),
            )
            yield _check(
                "laws",
                f"cable {epsilon} of {first} then {second}",
                passed=cable_diagram(compose(lower, upper), copies, epsilon)
                == cabled_stack,
            )

    for names in TENSOR_TRIPLES:
        left, middle, right = (corpus_diagram(name) for name in names)
        yield _check(
            "laws",
            f"tensor of {', '.join(names)} is associative",
            passed=tensor(tensor(left, middle), right)
            == tensor(left, tensor(middle, right)),
        )

    for name in DIAGRAM_SOURCES:
        diagram = corpus_diagram(name)
        tensor_units = tensor(empty, diagram) == diagram == tensor(diagram, empty)
        below = compose(trivial(diagram.bottom), diagram)
        above = compose(diagram, trivial(diagram.top))
        yield _check(
            "laws",
            f"empty diagram and straight strands are units for {name}",
            passed=tensor_units and below == diagram == above,
        )


def _morphism_laws() -> Iterator[CheckResult]:
    for names in COMPOSABLE_TRIPLES:
        first, second, third = (bq(corpus_diagram(name)) for name in names)
        yield _equal(
            "laws",
            f"amalgamation of {', '.join(names)} is associative",
            _counts(amalgamate(amalgamate(first, second), third).presentation),
            _counts(amalgamate(first, amalgamate(second, third)).presentation),
        )

    for name in DIAGRAM_SOURCES:
        morphism = bq(corpus_diagram(name))
        expected = _counts(morphism.presentation)
        below = amalgamate(identity_morphism(morphism.bottom), morphism)
        above = amalgamate(morphism, identity_morphism(morphism.top))
        yield _equal(
            "laws", f"identity below {name}", _counts(below.presentation), expected
        )
        yield _equal(
            "laws", f"identity above {name}", _counts(above.presentation), expected
        )

    for first, second in TENSOR_PAIRS:
        left, right = corpus_diagram(first), corpus_diagram(second)
        side_by_side = bq(tensor(left, right)).presentation
        separate = zip(
            _counts(bq(left).presentation),
            _counts(bq(right).presentation),
            strict=True,
        )
        yield _equal(
            "laws",
            f"{first} beside {second} is a disjoint union",
            _counts(side_by_side),
            tuple(left_count * right_count for left_count, right_count in separate),
        )
        yield _equal(
            "laws",
            f"{first} beside {second} matches the tensor of the sweeps",
            _counts(tensor_morphisms(bq(left), bq(right)).presentation),
            _counts(side_by_side),
        )


def _sweeps_fresh_arcs(diagram: TangleDiagram) -> bool:
    expected = len(diagram.bottom) + diagram.cup_count + diagram.crossing_count
    return bq(diagram).presentation.generator_count == expected


def _random_stacks(settings: QtangleSettings) -> list[CheckResult]:
    generator = random.Random(settings.seed)
    built: list[TangleDiagram] = []
    located = 0

    for _ in range(settings.random_pairs):
        bottom, slices, top = _random_stack(generator)

        try:
            built.append(TangleDiagram.build(bottom, top, slices))
        except LocatedError as error:
            if error.slice_index is not None and 0 <= error.slice_index <= len(slices):
                located += 1
            else:
                logger.info("Rejected %s without a slice position: %s", slices, error)
        except Exception:  # noqa: BLE001
            logger.info(
                "Slices %s raised an error that points nowhere", slices, exc_info=True
            )

    return [
        _check(
            "laws",
            "random slice stacks build or raise a located error",
            passed=len(built) + located == settings.random_pairs,
            detail=f"{len(built)} built, {located} rejected",
        ),
        _check(
            "laws",
            "random sweeps start one arc per bottom point, cup and crossing",
            passed=all(_sweeps_fresh_arcs(diagram) for diagram in built),
        ),
    ]


def _random_stack(
    generator: random.Random,
) -> tuple[tuple[int, ...], list[Slice], tuple[int, ...]]:
    """Draw signs and slices that mostly fit their levels; the top gets random signs."""
    width = generator.randint(0, MAX_RANDOM_WIDTH)
    bottom = tuple(generator.choice((1, -1)) for _ in range(width))
    slices: list[Slice] = []

    for _ in range(generator.randint(0, MAX_RANDOM_SLICES)):
        index = generator.randint(-1, width)
        shape = generator.randrange(3)

        if shape == 0:
            slices.append(Crossing(index, generator.choice(tuple(CrossingKind))))
        elif shape == 1:
            slices.append(Cup(index, generator.choice((None, 1, -1))))
            width += 2
        else:
            slices.append(Cap(index))
            width = max(width - 2, 0)

    top = tuple(generator.choice((1, -1)) for _ in range(width))
    return bottom, slices, top


def _free_quandle_axioms(settings: QtangleSettings) -> CheckResult:
    generator = random.Random(settings.seed)
    holding = 0

    for _ in range(settings.random_pairs):
        x, y, z = (_random_free_element(generator) for _ in range(3))

        if (
            fq_op(x, x, 1) == x
            and fq_op(fq_op(x, y, 1), y, -1) == x
            and fq_op(fq_op(x, y, -1), y, 1) == x
            and fq_op(fq_op(x, y, 1), z, 1) == fq_op(fq_op(x, z, 1), fq_op(y, z, 1), 1)
        ):
            holding += 1
        else:
            logger.info("Free quandle axioms fail on %s, %s and %s", x, y, z)

    return _check(
        "laws",
        "free quandle operation satisfies the axioms",
        passed=holding == settings.random_pairs,
        detail=f"{holding}/{settings.random_pairs} random triples",
    )


def _random_free_element(generator: random.Random) -> FreeQuandleElement:
    tail = FreeGroupWord(
        tuple(
            (generator.choice(FREE_GENERATORS), generator.choice((1, -1)))
            for _ in range(generator.randint(0, MAX_TAIL_LENGTH))
        )
    )
    return FreeQuandleElement(generator.choice(FREE_GENERATORS), tail)
