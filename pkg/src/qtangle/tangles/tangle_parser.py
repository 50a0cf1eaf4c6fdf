"""Line-oriented tangle language.

A file lists `bottom` signs, one slice per statement from bottom to top, then
`top` signs. Statements are separated by newlines or `;`, `#` starts a comment
and indices are 1-based::

    bottom +
    cup 2 +
    x 1
    x 1
    x 1
    cap 2
    top +
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Final, final

import pyparsing as pp

from qtangle.exceptions import LocatedError, TangleSyntaxError
from qtangle.tangles.signed_boundary import SignedBoundary
from qtangle.tangles.slices import Cap, Crossing, CrossingKind, Cup, Slice
from qtangle.tangles.tangle_diagram import TangleDiagram

logger = logging.getLogger(__name__)

GRAMMAR_SUMMARY: Final = """\
tangle file (one statement per line or separated by ';', '#' starts a comment):
  bottom SIGN*          signs of the bottom points, e.g. 'bottom + -'
  x I [+|-]             crossing of strands I and I+1 ('-' makes it negative)
  xbar I                negative crossing of strands I and I+1
  cup I [+|-]           new strands at I and I+1, optional sign of the left one
  cap I                 join strands I and I+1
  top SIGN*             signs of the top points
indices are 1-based; SIGN is '+' or '-'"""

_sign = pp.one_of("+ -").set_parse_action(lambda tokens: 1 if tokens[0] == "+" else -1)
_index = pp.Word(pp.nums).set_parse_action(lambda tokens: int(tokens[0]))
_signs = pp.Group(pp.ZeroOrMore(_sign))("signs")

_bottom = pp.Keyword("bottom")("keyword") + _signs
_top = pp.Keyword("top")("keyword") + _signs
_crossing = pp.Keyword("x")("keyword") + _index("index") + pp.Opt(_sign("sign"))
_negative_crossing = pp.Keyword("xbar")("keyword") + _index("index")
_cup = pp.Keyword("cup")("keyword") + _index("index") + pp.Opt(_sign("sign"))
_cap = pp.Keyword("cap")("keyword") + _index("index")

_statement: Final = _bottom | _top | _negative_crossing | _crossing | _cup | _cap


@final
@dataclass(frozen=True)
class _Statement:
    tokens: pp.ParseResults
    line: int
    column: int

    @property
    def keyword(self) -> str:
        return str(self.tokens["keyword"])


def parse_tangle(text: str) -> TangleDiagram:
    """Parse the tangle language into a validated diagram.

    Raises:
        TangleSyntaxError: The text does not follow the grammar.
        TangleWidthError: A slice does not fit its level.
        TangleOrientationError: The declared signs cannot be oriented consistently.

    """
    statements = list(_statements(text))

    if len(statements) == 0 or statements[0].keyword != "bottom":
        line, column = _position_of(statements, 0)
        error_message = "A tangle must start with a 'bottom' statement"
        raise TangleSyntaxError(error_message, line=line, column=column)

    if len(statements) == 1 or statements[-1].keyword != "top":
        line, column = _end_position(text)
        error_message = "A tangle must end with a 'top' statement"
        raise TangleSyntaxError(error_message, line=line, column=column)

    body = statements[1:-1]

    for statement in body:
        if statement.keyword in {"bottom", "top"}:
            error_message = f"Unexpected '{statement.keyword}' between slices"
            raise TangleSyntaxError(
                error_message, line=statement.line, column=statement.column
            )

    bottom = SignedBoundary(tuple(statements[0].tokens["signs"]))
    top = SignedBoundary(tuple(statements[-1].tokens["signs"]))
    slices = tuple(_to_slice(statement) for statement in body)

    try:
        diagram = TangleDiagram(bottom, top, slices)
    except LocatedError as error:
        position = statements[-1]

        if error.slice_index is not None and error.slice_index < len(body):
            position = body[error.slice_index]

        raise error.located(position.line, position.column) from error

    logger.debug(
        "Parsed a (%d,%d)-tangle with %d slices", len(bottom), len(top), len(slices)
    )
    return diagram


def load_tangle(path: Path) -> TangleDiagram:
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as error:
        error_message = f"'{path.name}' is not UTF-8 text"
        raise TangleSyntaxError(error_message) from error

    return parse_tangle(text)


def format_tangle(diagram: TangleDiagram) -> str:
    """Print a diagram in the tangle language with resolved cup orientations."""
    lines = [_keyword_line("bottom", diagram.bottom)]

    for item in diagram.slices:
        match item:
            case Crossing(index=index, kind=kind):
                lines.append(f"{kind.value} {index + 1}")
            case Cup(index=index, orientation=orientation):
                lines.append(f"cup {index + 1} {'-' if orientation == -1 else '+'}")
            case Cap(index=index):
                lines.append(f"cap {index + 1}")

    lines.append(_keyword_line("top", diagram.top))
    return "\n".join(lines) + "\n"


def _keyword_line(keyword: str, boundary: SignedBoundary) -> str:
    return f"{keyword} {boundary.to_text()}".rstrip()


def _statements(text: str) -> list[_Statement]:
    statements: list[_Statement] = []

    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0]
        offset = 0

        for chunk in line.split(";"):
            stripped = chunk.strip()

            if stripped:
                column = offset + len(chunk) - len(chunk.lstrip()) + 1

                try:
                    tokens = _statement.parse_string(stripped, parse_all=True)
                except pp.ParseBaseException as error:
                    error_message = f"Cannot parse '{stripped}'"
                    raise TangleSyntaxError(
                        error_message, line=line_number, column=column + error.loc
                    ) from error

                statements.append(_Statement(tokens, line_number, column))

            offset += len(chunk) + 1

    return statements


def _to_slice(statement: _Statement) -> Slice:
    tokens = statement.tokens
    index = int(tokens["index"]) - 1
    sign = int(tokens["sign"]) if "sign" in tokens else None

    match statement.keyword:
        case "x":
            kind = CrossingKind.NEGATIVE if sign == -1 else CrossingKind.POSITIVE
            return Crossing(index, kind)
        case "xbar":
            return Crossing(index, CrossingKind.NEGATIVE)
        case "cup":
            return Cup(index, sign)
        case _:
            return Cap(index)


def _position_of(statements: list[_Statement], position: int) -> tuple[int, int]:
    if position < len(statements):
        return statements[position].line, statements[position].column

    return 1, 1


def _end_position(text: str) -> tuple[int, int]:
    return max(len(text.splitlines()), 1), 1
