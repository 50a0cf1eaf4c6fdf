import re

import pytest

from qtangle.colorings.coloring_enumerator import count_colorings
from qtangle.constructions.closures import (
    classical_closure,
    connected_sum,
    periodic_link,
    plat_closure,
    rainbow_closure,
)
from qtangle.corpus import (
    DIAGRAM_SOURCES,
    KNOT_TANGLES,
    corpus_diagram,
    fixture_morphism,
    fixture_presentation,
)
from qtangle.exceptions import (
    BoundaryMismatchError,
    IllegalSignPatternError,
    SignConventionError,
)
from qtangle.fundamental_quandle import bq
from qtangle.presentations.amalgamation import amalgamate
from qtangle.presentations.bordered_morphism import identity_morphism
from qtangle.presentations.quandle_presentation import QuandlePresentation
from qtangle.quandles.finite_quandle import dihedral_quandle
from qtangle.quandles.quandle_registry import standard_quandles
from qtangle.tangles.named_tangles import closure_diagram, plat_closure_diagram
from qtangle.tangles.tangle_operations import compose, negate

CLOSABLE_DIAGRAMS = [
    name
    for name in sorted(DIAGRAM_SOURCES)
    if corpus_diagram(name).bottom == corpus_diagram(name).top
]


def _counts(presentation: QuandlePresentation) -> list[int]:
    return [count_colorings(presentation, quandle) for quandle in standard_quandles()]


def _closure_count(name: str, quandle_order: int) -> int:
    closed = classical_closure(bq(corpus_diagram(name)))
    return count_colorings(closed, dihedral_quandle(quandle_order))


class TestClassicalClosure:
    @pytest.mark.parametrize(
        argnames="name",
        argvalues=[*KNOT_TANGLES, "r3-left", "braid-mixed", "clasp"],
    )
    def test_match_closed_diagram(self, name: str) -> None:
        diagram = corpus_diagram(name)

        closed = classical_closure(bq(diagram))

        assert _counts(closed) == _counts(bq(closure_diagram(diagram)).presentation)

    def test_simplify_keeps_counts(self) -> None:
        morphism = bq(corpus_diagram("figure-eight"))

        simplified = classical_closure(morphism)
        unsimplified = classical_closure(morphism, simplify=False)

        assert simplified.generator_count < unsimplified.generator_count
        assert unsimplified.relation_count == morphism.presentation.relation_count + 1
        assert _counts(simplified) == _counts(unsimplified)

    def test_trefoil_closure_counts(self) -> None:
        closed = classical_closure(bq(corpus_diagram("trefoil")))

        assert count_colorings(closed, dihedral_quandle(3)) == 9

    @pytest.mark.parametrize(argnames="name", argvalues=CLOSABLE_DIAGRAMS)
    def test_reversed_orientation_keeps_counts(self, name: str) -> None:
        diagram = corpus_diagram(name)

        negated = classical_closure(bq(negate(diagram)))

        assert _counts(negated) == _counts(classical_closure(bq(diagram)))

    def test_reject_different_ends(self) -> None:
        with pytest.raises(
            BoundaryMismatchError, match=re.escape("expected (), got (+,-)")
        ):
            classical_closure(bq(corpus_diagram("cup-pair")))


class TestPlatClosure:
    def test_match_closed_diagram(self) -> None:
        diagram = corpus_diagram("plat-trefoil")

        closed = plat_closure(bq(diagram))
        drawn = bq(plat_closure_diagram(diagram))

        assert _counts(closed) == _counts(drawn.presentation)
        assert count_colorings(closed, dihedral_quandle(3)) == 9

    def test_reject_boundary_without_plat_pattern(self) -> None:
        with pytest.raises(
            IllegalSignPatternError,
            match=re.escape("Sign pattern (+,+) does not admit a plat closure"),
        ):
            plat_closure(bq(corpus_diagram("unlink-2")))


class TestPeriodicLink:
    def test_pretzel_link_matches_reduced_fixture(self) -> None:
        closed = periodic_link(fixture_morphism("pretzel-tangle"), 3)
        reduced = fixture_presentation("pretzel-periodic-reduced")

        assert _counts(closed) == _counts(reduced)

    def test_sweep_and_literal_tangle_agree(self) -> None:
        from_diagram = periodic_link(bq(corpus_diagram("pretzel")), 3)
        from_literal = periodic_link(fixture_morphism("pretzel-tangle"), 3)

        assert _counts(from_diagram) == _counts(from_literal)

    def test_name_copies_with_suffix(self) -> None:
        closed = periodic_link(identity_morphism([1]), 2, simplify=False)

        assert closed.generators == ("a1_1", "a1_2")
        assert [str(relation) for relation in closed.relations] == [
            "a1_1 = a1_2",
            "a1_2 = a1_1",
        ]

    def test_single_period_is_classical_closure(self) -> None:
        morphism = bq(corpus_diagram("braid-mixed"))

        closed = periodic_link(morphism, 1)

        assert _counts(closed) == _counts(classical_closure(morphism))

    @pytest.mark.parametrize(
        argnames="name", argvalues=["cable-pattern", "braid-mixed"]
    )
    @pytest.mark.parametrize(argnames="period", argvalues=[1, 2, 3, 4])
    def test_match_closure_of_amalgamated_copies(self, name: str, period: int) -> None:
        morphism = bq(corpus_diagram(name))
        chain = morphism

        for _ in range(period - 1):
            chain = amalgamate(chain, morphism)

        closed = periodic_link(morphism, period)

        assert _counts(closed) == _counts(classical_closure(chain))

    def test_pretzel_link_matches_drawn_pretzel_knot(self) -> None:
        closed = periodic_link(bq(corpus_diagram("pretzel")), 3)
        drawn = bq(corpus_diagram("pretzel-333"))

        assert drawn.presentation.generator_count == 12
        assert _counts(drawn.presentation) == [27, 4, 5, 30]
        assert _counts(closed) == _counts(drawn.presentation)

    def test_reject_non_positive_period(self) -> None:
        with pytest.raises(
            ValueError, match=re.escape("The period must be at least 1, got 0")
        ):
            periodic_link(identity_morphism([1]), 0)


class TestConnectedSum:
    def test_granny_knot(self) -> None:
        trefoil = corpus_diagram("trefoil")

        granny = connected_sum(bq(negate(trefoil)), bq(trefoil))

        assert count_colorings(granny, dihedral_quandle(3)) == 27
        assert _counts(granny) == _counts(fixture_presentation("granny-trefoils"))

    @pytest.mark.parametrize(
        argnames=("first", "second"),
        argvalues=[
            ("trefoil", "figure-eight"),
            ("figure-eight", "figure-eight"),
            ("trefoil", "kink"),
        ],
    )
    def test_counts_multiply_over_connected_quandles(
        self, first: str, second: str
    ) -> None:
        composite = connected_sum(
            bq(negate(corpus_diagram(first))), bq(corpus_diagram(second))
        )

        for order in (3, 5):
            product = _closure_count(first, order) * _closure_count(second, order)
            composite_count = count_colorings(composite, dihedral_quandle(order))

            assert composite_count * order == product

    def test_reject_wrong_orientation(self) -> None:
        trefoil = bq(corpus_diagram("trefoil"))

        with pytest.raises(
            SignConventionError,
            match=re.escape("Orientation convention requires (-), got (+)"),
        ):
            connected_sum(trefoil, trefoil)

    def test_reject_tangle_that_is_not_closed_up(self) -> None:
        with pytest.raises(BoundaryMismatchError):
            connected_sum(bq(corpus_diagram("cup-pair")), bq(corpus_diagram("trefoil")))


class TestRainbowClosure:
    def test_match_diagram_closed_by_cup_and_cap(self) -> None:
        clasp = corpus_diagram("clasp")
        closed_diagram = compose(
            compose(corpus_diagram("cup-pair"), clasp), corpus_diagram("cap-pair")
        )

        closed = rainbow_closure(bq(clasp))

        assert _counts(closed) == _counts(bq(closed_diagram).presentation)

    def test_reject_boundary_without_rainbow_pattern(self) -> None:
        with pytest.raises(
            IllegalSignPatternError, match=re.escape("does not admit a rainbow closure")
        ):
            rainbow_closure(bq(corpus_diagram("unlink-2")))
