import re

import pytest

from qtangle.exceptions import DuplicateGeneratorError, UndeclaredGeneratorError
from qtangle.presentations.quandle_presentation import (
    QuandlePresentation,
    Relation,
    fresh_renaming,
)
from qtangle.quandles.quandle_term import generator


class TestQuandlePresentation:
    def test_count_generators_and_relations(self) -> None:
        a, b = generator("a"), generator("b")

        presentation = QuandlePresentation(("a", "b"), (Relation(a.triangle(b), b),))

        assert presentation.generator_count == 2
        assert presentation.relation_count == 1
        assert str(presentation.relations[0]) == "a ^ b = b"

    def test_reject_duplicate_generator(self) -> None:
        with pytest.raises(
            DuplicateGeneratorError,
            match=re.escape("Generator 'a' is declared more than once"),
        ):
            QuandlePresentation(("a", "b", "a"))

    def test_reject_undeclared_generator(self) -> None:
        relation = Relation(generator("a"), generator("c"))

        with pytest.raises(
            UndeclaredGeneratorError,
            match=re.escape("Generator 'c' is not declared by the presentation"),
        ):
            QuandlePresentation(("a",), (relation,))

    def test_rename_generators_everywhere(self) -> None:
        a, b = generator("a"), generator("b")
        presentation = QuandlePresentation(("a", "b"), (Relation(a.triangle(b), b),))

        renamed = presentation.rename({"b": "c"})

        assert renamed.generators == ("a", "c")
        assert str(renamed.relations[0]) == "a ^ c = c"

    def test_union_and_extra_relations(self) -> None:
        left = QuandlePresentation.free(["a"])
        right = QuandlePresentation.free(["b"])

        extra = Relation(generator("a"), generator("b"))

        glued = left.union(right).with_relations([extra])

        assert glued.generators == ("a", "b")
        assert str(glued.relations[0]) == "a = b"

    def test_reflexive_relation(self) -> None:
        term = generator("a").triangle(generator("b"))

        assert Relation(term, term).is_reflexive
        assert not Relation(term, generator("a")).is_reflexive

    def test_empty_presentation(self) -> None:
        assert QuandlePresentation.empty().generator_count == 0


class TestFreshRenaming:
    def test_rename_only_colliding_names(self) -> None:
        assert fresh_renaming(["x", "x_2"], ["x", "y"]) == {"x": "x_3"}

    def test_avoid_names_of_both_sides(self) -> None:
        assert fresh_renaming(["a1"], ["a1", "a1_2"]) == {"a1": "a1_3"}

    def test_nothing_to_rename(self) -> None:
        assert fresh_renaming(["a"], ["b"]) == {}
