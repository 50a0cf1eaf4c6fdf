"""Text and JSON forms of presentations and bordered morphisms.

Text form, one statement per line (`#` starts a comment)::

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

`^` is ▷ and `v` is ◁. A binary term inside another one is parenthesized; the
outermost one is not. Plain presentations have only the `gens:` line and the
relations.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Final, Literal, Self, final

import pyparsing as pp
from pydantic import BaseModel, ConfigDict, ValidationError

from qtangle.exceptions import PresentationSyntaxError
from qtangle.presentations.bordered_morphism import BorderedMorphism
from qtangle.presentations.quandle_presentation import QuandlePresentation, Relation
from qtangle.quandles.quandle_term import (
    GeneratorTerm,
    OperationTerm,
    QuandleTerm,
    TermOperator,
)
from qtangle.tangles.signed_boundary import SignedBoundary


def _build_side(tokens: pp.ParseResults) -> QuandleTerm:
    if len(tokens) == 1:
        return tokens[0]

    return OperationTerm(tokens[0], TermOperator(tokens[1]), tokens[2])


_name = pp.Word(pp.alphas + "_", pp.alphanums + "_")
_generator = _name.copy().set_parse_action(lambda tokens: GeneratorTerm(tokens[0]))
_operator = pp.Literal("^") | pp.Keyword("v")
_side = pp.Forward()
_operand = _generator | pp.Suppress("(") + _side + pp.Suppress(")")
_side <<= (_operand + pp.Opt(_operator + _operand)).set_parse_action(_build_side)

_sign = pp.one_of("+ -").set_parse_action(lambda tokens: 1 if tokens[0] == "+" else -1)
_index = pp.Word(pp.nums).set_parse_action(lambda tokens: int(tokens[0]))

_gens_line = (
    pp.Keyword("gens")("kind")
    + pp.Suppress(":")
    + pp.Group(pp.ZeroOrMore(_name))("names")
)
_boundary_line = (
    (pp.Keyword("bottom") | pp.Keyword("top"))("kind")
    + pp.Suppress(":")
    + pp.Group(pp.ZeroOrMore(_sign))("signs")
)
_image_line = (
    (pp.Keyword("in") | pp.Keyword("out"))("kind")
    + _index("index")
    + pp.Suppress(":")
    + pp.Group(_side)("term")
)
_relation_line = pp.Group(_side)("lhs") + pp.Suppress("=") + pp.Group(_side)("rhs")

_line: Final = pp.MatchFirst(
    [
        expression + pp.StringEnd()
        for expression in (_gens_line, _boundary_line, _image_line, _relation_line)
    ]
)


@dataclass
class _Document:
    generators: tuple[str, ...] | None = None
    relations: list[Relation] = field(default_factory=list[Relation])
    boundaries: dict[str, SignedBoundary] = field(
        default_factory=dict[str, SignedBoundary]
    )
    images: dict[str, dict[int, QuandleTerm]] = field(
        default_factory=lambda: {"in": {}, "out": {}}
    )


def parse_presentation(text: str) -> QuandlePresentation:
    """Parse the text form; boundary lines, when present, are ignored.

    Raises:
        PresentationSyntaxError: The text does not follow the grammar or mentions an undeclared generator.

    """
    document = _parse_document(text)
    return QuandlePresentation(document.generators or (), tuple(document.relations))


def parse_bordered_morphism(text: str) -> BorderedMorphism:
    document = _parse_document(text)
    last_line = max(len(text.splitlines()), 1)

    for kind in ("bottom", "top"):
        if kind not in document.boundaries:
            error_message = f"Missing '{kind}:' line"
            raise PresentationSyntaxError(error_message, line=last_line, column=1)

    maps: list[tuple[QuandleTerm, ...]] = []

    for kind, side in (("in", "bottom"), ("out", "top")):
        boundary = document.boundaries[side]
        images = document.images[kind]

        if sorted(images) != list(range(1, len(boundary) + 1)):
            error_message = f"Expected '{kind} h:' lines for h = 1..{len(boundary)}"
            raise PresentationSyntaxError(error_message, line=last_line, column=1)

        maps.append(tuple(images[position] for position in range(1, len(boundary) + 1)))

    return BorderedMorphism(
        document.boundaries["bottom"],
        document.boundaries["top"],
        QuandlePresentation(document.generators or (), tuple(document.relations)),
        maps[0],
        maps[1],
    )


def format_presentation(presentation: QuandlePresentation) -> str:
    lines = [_gens_text(presentation)]
    lines.extend(str(relation) for relation in presentation.relations)
    return "\n".join(lines) + "\n"


def format_bordered_morphism(morphism: BorderedMorphism) -> str:
    lines = [
        f"bottom: {morphism.bottom.to_text()}".rstrip(),
        f"top: {morphism.top.to_text()}".rstrip(),
        _gens_text(morphism.presentation),
    ]
    lines.extend(str(relation) for relation in morphism.presentation.relations)

    for kind, images in (("in", morphism.map_bottom), ("out", morphism.map_top)):
        lines.extend(
            f"{kind} {position}: {term}"
            for position, term in enumerate(images, start=1)
        )

    return "\n".join(lines) + "\n"


def _gens_text(presentation: QuandlePresentation) -> str:
    return f"gens: {' '.join(presentation.generators)}".rstrip()


def _parse_document(text: str) -> _Document:
    document = _Document()

    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        content = raw_line.split("#", 1)[0]
        stripped = content.strip()

        if not stripped:
            continue

        column = len(content) - len(content.lstrip()) + 1

        try:
            tokens = _line.parse_string(stripped, parse_all=True)
        except pp.ParseBaseException as error:
            error_message = f"Cannot parse '{stripped}'"
            raise PresentationSyntaxError(
                error_message, line=line_number, column=column + error.loc
            ) from error

        _apply_line(document, tokens, line_number, column)

    return document


def _apply_line(
    document: _Document, tokens: pp.ParseResults, line: int, column: int
) -> None:
    kind = tokens.get("kind")

    if kind == "gens":
        if document.generators is not None:
            error_message = "Duplicate 'gens:' line"
            raise PresentationSyntaxError(error_message, line=line, column=column)

        names = tuple(str(name) for name in tokens["names"])

        if len(set(names)) != len(names):
            duplicate = next(name for name in names if names.count(name) > 1)
            error_message = f"Generator '{duplicate}' is declared more than once"
            raise PresentationSyntaxError(error_message, line=line, column=column)

        document.generators = names
        return

    if kind in {"bottom", "top"}:
        signs = tuple(int(sign) for sign in tokens["signs"])
        document.boundaries[str(kind)] = SignedBoundary(signs)
        return

    if document.generators is None:
        raise PresentationSyntaxError(
            "The 'gens:' line must come before relations and boundary images",
            line=line,
            column=column,
        )

    declared = set(document.generators)
    keys = ("term",) if kind in {"in", "out"} else ("lhs", "rhs")
    terms: list[QuandleTerm] = [tokens[key][0] for key in keys]

    for term in terms:
        for name in sorted(term.generators() - declared):
            error_message = f"Generator '{name}' is not declared by the presentation"
            raise PresentationSyntaxError(error_message, line=line, column=column)

    if kind in {"in", "out"}:
        document.images[str(kind)][int(tokens["index"])] = terms[0]
    else:
        document.relations.append(Relation(terms[0], terms[1]))


class GeneratorNode(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    gen: str


class OperationNode(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    op: Literal["^", "v"]
    left: "GeneratorNode | OperationNode"
    right: "GeneratorNode | OperationNode"


type TermNode = GeneratorNode | OperationNode


def term_to_node(term: QuandleTerm) -> TermNode:
    match term:
        case GeneratorTerm(name=name):
            return GeneratorNode(gen=name)
        case OperationTerm(left=left, operator=operator, right=right):
            return OperationNode(
                op=operator.value, left=term_to_node(left), right=term_to_node(right)
            )
        case _:
            error_message = f"Unsupported term node {term!r}"
            raise TypeError(error_message)


def node_to_term(node: TermNode) -> QuandleTerm:
    if isinstance(node, GeneratorNode):
        return GeneratorTerm(node.gen)

    return OperationTerm(
        node_to_term(node.left), TermOperator(node.op), node_to_term(node.right)
    )


class RelationDocument(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    lhs: GeneratorNode | OperationNode
    rhs: GeneratorNode | OperationNode


class PresentationDocument(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    generators: list[str]
    relations: list[RelationDocument]

    @classmethod
    def from_presentation(cls, presentation: QuandlePresentation) -> Self:
        return cls(
            generators=list(presentation.generators),
            relations=[
                RelationDocument(
                    lhs=term_to_node(relation.lhs), rhs=term_to_node(relation.rhs)
                )
                for relation in presentation.relations
            ],
        )

    def to_presentation(self) -> QuandlePresentation:
        return QuandlePresentation(
            tuple(self.generators),
            tuple(
                Relation(node_to_term(relation.lhs), node_to_term(relation.rhs))
                for relation in self.relations
            ),
        )


class BorderedMorphismDocument(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    bottom: list[Literal[1, -1]]
    top: list[Literal[1, -1]]
    presentation: PresentationDocument
    map_bottom: list[GeneratorNode | OperationNode]
    map_top: list[GeneratorNode | OperationNode]

    @classmethod
    def from_morphism(cls, morphism: BorderedMorphism) -> Self:
        return cls(
            bottom=[1 if sign > 0 else -1 for sign in morphism.bottom],
            top=[1 if sign > 0 else -1 for sign in morphism.top],
            presentation=PresentationDocument.from_presentation(morphism.presentation),
            map_bottom=[term_to_node(term) for term in morphism.map_bottom],
            map_top=[term_to_node(term) for term in morphism.map_top],
        )

    def to_morphism(self) -> BorderedMorphism:
        return BorderedMorphism(
            SignedBoundary(tuple(self.bottom)),
            SignedBoundary(tuple(self.top)),
            self.presentation.to_presentation(),
            tuple(node_to_term(node) for node in self.map_bottom),
            tuple(node_to_term(node) for node in self.map_top),
        )


JSON_INDENT: Final = 2


def presentation_to_json(presentation: QuandlePresentation) -> str:
    return PresentationDocument.from_presentation(presentation).model_dump_json(
        indent=JSON_INDENT
    )


def presentation_from_json(text: str) -> QuandlePresentation:
    try:
        document = PresentationDocument.model_validate_json(text)
    except ValidationError as error:
        error_message = f"Invalid presentation JSON: {error.error_count()} errors"
        raise PresentationSyntaxError(error_message) from error

    return document.to_presentation()


def bordered_morphism_to_json(morphism: BorderedMorphism) -> str:
    return BorderedMorphismDocument.from_morphism(morphism).model_dump_json(
        indent=JSON_INDENT
    )


def bordered_morphism_from_json(text: str) -> BorderedMorphism:
    try:
        document = BorderedMorphismDocument.model_validate_json(text)
    except ValidationError as error:
        error_message = f"Invalid bordered morphism JSON: {error.error_count()} errors"
        raise PresentationSyntaxError(error_message) from error

    return document.to_morphism()


def read_presentation_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except UnicodeDecodeError as error:
        error_message = f"'{path.name}' is not UTF-8 text"
        raise PresentationSyntaxError(error_message) from error
