import json
import re
from pathlib import Path

import pytest

from qtangle.exceptions import PresentationSyntaxError, UndeclaredGeneratorError
from qtangle.presentations.presentation_format import (
    BorderedMorphismDocument,
    PresentationDocument,
    bordered_morphism_from_json,
    bordered_morphism_to_json,
    format_bordered_morphism,
    format_presentation,
    parse_bordered_morphism,
    parse_presentation,
    presentation_from_json,
    presentation_to_json,
    read_presentation_text,
)
from qtangle.presentations.quandle_presentation import Relation
from qtangle.quandles.quandle_term import GeneratorTerm, OperationTerm, TermOperator
from qtangle.tangles.signed_boundary import SignedBoundary

PRETZEL_TANGLE = """\
bottom: + +
top: + +
gens: y1 y2 y3 y4 y5
y3 ^ y4 = y1
y4 ^ y3 = y2
y5 ^ y2 = y3
in 1: y1
in 2: y2
out 1: y4
out 2: y5
"""

A_UNDER_B = OperationTerm(
    GeneratorTerm("a"), TermOperator.TRIANGLE, GeneratorTerm("b")
)


class TestPresentationText:
    def test_parse_relation_into_terms(self) -> None:
        presentation = parse_presentation("gens: a b\na ^ b = a\n")

        assert presentation.relation_count == 1
        assert presentation.relations[0] == Relation(A_UNDER_B, GeneratorTerm("a"))

    def test_parse_boundary_images_into_terms(self) -> None:
        morphism = parse_bordered_morphism(
            "bottom: +\ntop: +\ngens: a b\nin 1: a ^ b\nout 1: b\n"
        )

        assert morphism.map_bottom == (A_UNDER_B,)
        assert morphism.map_top == (GeneratorTerm("b"),)

    def test_parse_nested_terms(self) -> None:
        presentation = parse_presentation(
            "gens: a b c\n(a ^ b) v (c ^ a) = b ^ (c v a)  # nested\n"
        )

        assert presentation.generators == ("a", "b", "c")
        assert str(presentation.relations[0]) == "(a ^ b) v (c ^ a) = b ^ (c v a)"

    def test_format_presentation(self) -> None:
        text = "gens: a b\na ^ b = b\n"

        assert format_presentation(parse_presentation(text)) == text

    def test_format_empty_presentation(self) -> None:
        assert format_presentation(parse_presentation("gens:\n")) == "gens:\n"

    def test_ignore_boundary_lines_in_plain_presentation(self) -> None:
        presentation = parse_presentation(PRETZEL_TANGLE)

        assert presentation.generator_count == 5
        assert presentation.relation_count == 3

    def test_parse_bordered_morphism(self) -> None:
        morphism = parse_bordered_morphism(PRETZEL_TANGLE)

        assert morphism.bottom == SignedBoundary((1, 1))
        assert [str(term) for term in morphism.map_bottom] == ["y1", "y2"]
        assert [str(term) for term in morphism.map_top] == ["y4", "y5"]

    def test_format_bordered_morphism(self) -> None:
        morphism = parse_bordered_morphism(PRETZEL_TANGLE)

        assert format_bordered_morphism(morphism) == PRETZEL_TANGLE

    def test_format_closed_morphism(self) -> None:
        morphism = parse_bordered_morphism("bottom:\ntop:\ngens: a\n")

        assert format_bordered_morphism(morphism) == "bottom:\ntop:\ngens: a\n"

    @pytest.mark.parametrize(
        argnames=("text", "message", "line"),
        argvalues=[
            (
                "a ^ b = b\n",
                "The 'gens:' line must come before relations and boundary images",
                1,
            ),
            (
                "gens: a\na ^ b = a\n",
                "Generator 'b' is not declared by the presentation",
                2,
            ),
            ("gens: a a\n", "Generator 'a' is declared more than once", 1),
            ("gens: a\ngens: b\n", "Duplicate 'gens:' line", 2),
            ("gens: a\n\na ^ = a\n", "Cannot parse 'a ^ = a'", 3),
        ],
    )
    def test_reject_malformed_text(self, text: str, message: str, line: int) -> None:
        with pytest.raises(
            PresentationSyntaxError, match=re.escape(message)
        ) as exception_info:
            parse_presentation(text)

        assert exception_info.value.line == line

    def test_reject_missing_boundary_line(self) -> None:
        with pytest.raises(
            PresentationSyntaxError, match=re.escape("Missing 'top:' line")
        ):
            parse_bordered_morphism("bottom: +\ngens: a\nin 1: a\n")

    def test_reject_missing_boundary_images(self) -> None:
        with pytest.raises(
            PresentationSyntaxError,
            match=re.escape("Expected 'out h:' lines for h = 1..1"),
        ):
            parse_bordered_morphism("bottom: +\ntop: +\ngens: a\nin 1: a\n")

    def test_read_presentation_file(self, tmp_path: Path) -> None:
        path = tmp_path / "pretzel.pres"
        path.write_text(PRETZEL_TANGLE, encoding="utf-8")

        assert read_presentation_text(path) == PRETZEL_TANGLE

    def test_reject_file_that_is_not_utf8(self, tmp_path: Path) -> None:
        path = tmp_path / "binary.pres"
        path.write_bytes(b"gens: a\n\xfe\xff\n")

        with pytest.raises(
            PresentationSyntaxError, match=re.escape("'binary.pres' is not UTF-8 text")
        ):
            read_presentation_text(path)


class TestPresentationJson:
    def test_write_term_trees(self) -> None:
        presentation = parse_presentation("gens: a b\na ^ b = b\n")

        document = json.loads(presentation_to_json(presentation))

        assert document == {
            "generators": ["a", "b"],
            "relations": [
                {
                    "lhs": {"op": "^", "left": {"gen": "a"}, "right": {"gen": "b"}},
                    "rhs": {"gen": "b"},
                }
            ],
        }

    def test_read_written_presentation(self) -> None:
        presentation = parse_presentation("gens: a b c\n(a ^ b) v c = b ^ (c v a)\n")

        written = presentation_to_json(presentation)

        assert presentation_from_json(written) == presentation

    def test_read_written_morphism(self) -> None:
        morphism = parse_bordered_morphism(PRETZEL_TANGLE)

        written = bordered_morphism_to_json(morphism)

        assert bordered_morphism_from_json(written) == morphism

    def test_documents_mirror_values(self) -> None:
        morphism = parse_bordered_morphism(PRETZEL_TANGLE)

        document = BorderedMorphismDocument.from_morphism(morphism)
        presentation_document = PresentationDocument.from_presentation(
            morphism.presentation
        )

        assert document.bottom == [1, 1]
        assert document.to_morphism() == morphism
        assert presentation_document.to_presentation() == morphism.presentation

    def test_reject_document_with_missing_fields(self) -> None:
        with pytest.raises(
            PresentationSyntaxError,
            match=re.escape("Invalid presentation JSON: 2 errors"),
        ):
            presentation_from_json("{}")

    def test_reject_unknown_operator(self) -> None:
        operation = {"op": "*", "left": {"gen": "a"}, "right": {"gen": "a"}}
        text = json.dumps(
            {
                "generators": ["a"],
                "relations": [{"lhs": operation, "rhs": {"gen": "a"}}],
            }
        )

        with pytest.raises(
            PresentationSyntaxError, match=re.escape("Invalid presentation JSON")
        ):
            presentation_from_json(text)

    def test_reject_undeclared_generator_in_document(self) -> None:
        text = json.dumps(
            {
                "generators": ["a"],
                "relations": [{"lhs": {"gen": "a"}, "rhs": {"gen": "b"}}],
            }
        )

        with pytest.raises(UndeclaredGeneratorError):
            presentation_from_json(text)
