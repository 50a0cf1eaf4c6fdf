"""Named diagrams and literal presentations used by `qtangle verify` and the tests.

Diagrams are written in the tangle language. Literal presentations are written in
the presentation text format with `^` for ▷ and `v` for ◁; copy `j` of an arc `x4`
is named `x4_j`.
"""

from collections.abc import Mapping
from functools import cache
from types import MappingProxyType
from typing import Final

from qtangle.presentations.bordered_morphism import BorderedMorphism
from qtangle.presentations.presentation_format import (
    parse_bordered_morphism,
    parse_presentation,
)
from qtangle.presentations.quandle_presentation import QuandlePresentation
from qtangle.tangles.tangle_diagram import TangleDiagram
from qtangle.tangles.tangle_parser import parse_tangle

DIAGRAM_SOURCES: Final[Mapping[str, str]] = MappingProxyType(
    {
        "unknot": "bottom +\ntop +\n",
        "unlink-2": "bottom + +\ntop + +\n",
        "trefoil": "bottom +\ncup 2\nx 1\nx 1\nx 1\ncap 2\ntop +\n",
        "figure-eight": (
            "bottom +\ncup 2\ncup 3\nx 1\nxbar 2\nx 1\nxbar 2\ncap 3\ncap 2\ntop +\n"
        ),
        # horizontal twist of three crossings; three copies close up to P(3,3,3)
        "pretzel": (
            "bottom + +\ncup 2\ncup 4\nx 1\nx 3\nx 5\ncap 2\ncap 2\ntop + +\n"
        ),
        "cable-pattern": "bottom + +\nx 1\nx 1\nx 1\ntop + +\n",
        # the two bottom ends join each other, as do the two top ends
        "clasp": "bottom + -\ncup 3\nx 2\nx 2\ncap 1\ntop + -\n",
        "cup-pair": "bottom\ncup 1\ntop + -\n",
        "cap-pair": "bottom + -\ncap 1\ntop\n",
        "kink": "bottom +\ncup 2\nx 1\ncap 2\ntop +\n",
        "r2-twist": "bottom + +\nx 1\nxbar 1\ntop + +\n",
        "r3-left": "bottom + + +\nx 1\nx 2\nx 1\ntop + + +\n",
        "r3-right": "bottom + + +\nx 2\nx 1\nx 2\ntop + + +\n",
        "r3-mixed-left": "bottom + + +\nx 1\nx 2\nxbar 1\ntop + + +\n",
        "r3-mixed-right": "bottom + + +\nxbar 2\nx 1\nx 2\ntop + + +\n",
        "unlink-3": "bottom + + +\ntop + + +\n",
        "braid-mixed": "bottom + + +\nx 1\nxbar 2\nx 2\nx 1\ntop + + +\n",
        "plat-trefoil": "bottom + - - +\nx 2\nx 2\nx 2\ntop + - - +\n",
        # three vertical twist boxes of three crossings joined in pairs above and below
        "pretzel-333": (
            "bottom\ncup 1\ncup 2\ncup 4\n"
            "x 1\nx 1\nx 1\nx 3\nx 3\nx 3\nx 5\nx 5\nx 5\n"
            "cap 4\ncap 2\ncap 1\ntop\n"
        ),
    }
)

KNOT_TANGLES: Final = ("unknot", "trefoil", "figure-eight", "kink")
"""The `(1,1)`-tangles of the corpus, all oriented upward."""

COMPOSABLE_PAIRS: Final = (
    ("trefoil", "figure-eight"),
    ("trefoil", "trefoil"),
    ("figure-eight", "kink"),
    ("unknot", "trefoil"),
    ("kink", "kink"),
    ("pretzel", "pretzel"),
    ("pretzel", "r2-twist"),
    ("cable-pattern", "pretzel"),
    ("r2-twist", "cable-pattern"),
    ("r3-left", "r3-mixed-right"),
    ("braid-mixed", "r3-right"),
    ("cup-pair", "clasp"),
    ("clasp", "cap-pair"),
    ("clasp", "clasp"),
)

COMPOSABLE_TRIPLES: Final = (
    ("trefoil", "figure-eight", "kink"),
    ("r3-left", "braid-mixed", "r3-mixed-right"),
    ("cup-pair", "clasp", "cap-pair"),
)

REIDEMEISTER_PAIRS: Final = (
    ("kink", "unknot"),
    ("r2-twist", "unlink-2"),
    ("r3-left", "r3-right"),
    ("r3-mixed-left", "r3-mixed-right"),
)
"""Diagrams differing by a single move, first-kind to third-kind."""

_PRETZEL_TANGLE: Final = """\
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

_PRETZEL_PERIODIC_REDUCED: Final = """\
gens: y1_1 y1_2 y1_3 y2_1 y2_2 y2_3
(y2_2 ^ y2_1) ^ y1_2 = y1_1
y1_2 ^ (y2_2 ^ y2_1) = y2_1
(y2_3 ^ y2_2) ^ y1_3 = y1_2
y1_3 ^ (y2_3 ^ y2_2) = y2_2
(y2_1 ^ y2_3) ^ y1_1 = y1_3
y1_1 ^ (y2_1 ^ y2_3) = y2_3
"""

_GRANNY_TREFOILS: Final = """\
gens: x1 x2 x3 X y1 y2 y3 Y
x3 ^ x1 = x2
x2 ^ x3 = x1
X ^ x2 = x3
x1 = X
y3 ^ y1 = y2
Y ^ y2 = y3
y2 ^ y3 = y1
y1 = Y
y1 = x1
X = Y
"""

_GRANNY_REDUCED: Final = """\
gens: x2 x3 y2 y3
x3 ^ (x2 ^ x3) = x2
(y3 v y2) ^ x2 = x3
y3 ^ (x2 ^ x3) = y2
x2 ^ x3 = y2 ^ y3
"""

_FIGURE_EIGHT_CABLE: Final = """\
gens: y1 y2 y3 y4 y5 x1_1 x1_2 x2_1 x2_2 x3_1 x3_2 x4_1 x4_2 x5_1 x5_2
y3 ^ y1 = y2
y5 ^ y3 = y1
y4 ^ y5 = y3
(x4_1 ^ x1_1) ^ x1_2 = x3_1
(x4_2 ^ x1_1) ^ x1_2 = x3_2
(x2_1 ^ x3_1) ^ x3_2 = x1_1
(x2_2 ^ x3_1) ^ x3_2 = x1_2
(x4_1 ^ x2_1) ^ x2_2 = x5_1
(x4_2 ^ x2_1) ^ x2_2 = x5_2
(x2_1 ^ x4_1) ^ x4_2 = x3_1
(x2_2 ^ x4_1) ^ x4_2 = x3_2
y1 = x1_1
y2 = x1_2
y4 = x5_1
y5 = x5_2
"""

_FIGURE_EIGHT_CABLE_REDUCED: Final = """\
gens: y1 y2 x2_1 x2_2 x4_1 x4_2
(x2_1 ^ ((x4_1 ^ y1) ^ y2)) ^ ((x4_2 ^ y1) ^ y2) = y1
(x2_2 ^ ((x4_1 ^ y1) ^ y2)) ^ ((x4_2 ^ y1) ^ y2) = y2
(x4_1 ^ x2_1) ^ x2_2 = (y2 v y1) v (y1 v (y2 v y1))
(x4_2 ^ x2_1) ^ x2_2 = y1 v (y2 v y1)
(x4_1 ^ y1) ^ y2 = (x2_1 ^ x4_1) ^ x4_2
(x4_2 ^ y1) ^ y2 = (x2_2 ^ x4_1) ^ x4_2
"""

_TREFOIL_DOUBLE: Final = """\
gens: y1 y2 y3 y4 x1_1 x1_2 x2_1 x2_2 x3_1 x3_2 x4_1 x4_2
y2 ^ y3 = y1
y3 ^ y2 = y4
(x1_1 v x3_1) ^ x3_2 = x2_1
(x1_2 v x3_1) ^ x3_2 = x2_2
(x3_1 v x2_1) ^ x2_2 = x4_1
(x3_2 v x2_1) ^ x2_2 = x4_2
(x2_1 v x4_1) ^ x4_2 = x3_1
(x2_2 v x4_1) ^ x4_2 = x3_2
y1 = x1_1
y2 = x1_2
y3 = x4_1
y4 = x4_2
"""

_TREFOIL_DOUBLE_REDUCED: Final = """\
gens: y2 y3 x3_1 x3_2
(x3_1 v (((y2 ^ y3) v x3_1) ^ x3_2)) ^ ((y2 v x3_1) ^ x3_2) = y3
((((y2 ^ y3) v x3_1) ^ x3_2) v y3) ^ (y3 ^ y2) = x3_1
(x3_2 v (((y2 ^ y3) v x3_1) ^ x3_2)) ^ ((y2 v x3_1) ^ x3_2) = y3 ^ y2
(((y2 v x3_1) ^ x3_2) v y3) ^ (y3 ^ y2) = x3_2
"""

PRESENTATION_SOURCES: Final[Mapping[str, str]] = MappingProxyType(
    {
        "pretzel-periodic-reduced": _PRETZEL_PERIODIC_REDUCED,
        "granny-trefoils": _GRANNY_TREFOILS,
        "granny-reduced": _GRANNY_REDUCED,
        "figure-eight-cable": _FIGURE_EIGHT_CABLE,
        "figure-eight-cable-reduced": _FIGURE_EIGHT_CABLE_REDUCED,
        "trefoil-double": _TREFOIL_DOUBLE,
        "trefoil-double-reduced": _TREFOIL_DOUBLE_REDUCED,
    }
)

MORPHISM_SOURCES: Final[Mapping[str, str]] = MappingProxyType(
    {"pretzel-tangle": _PRETZEL_TANGLE}
)


@cache
def corpus_diagram(name: str) -> TangleDiagram:
    """Parse a named diagram.

    Raises:
        KeyError: No diagram has this name.

    """
    return parse_tangle(DIAGRAM_SOURCES[name])


@cache
def fixture_presentation(name: str) -> QuandlePresentation:
    return parse_presentation(PRESENTATION_SOURCES[name])


@cache
def fixture_morphism(name: str) -> BorderedMorphism:
    return parse_bordered_morphism(MORPHISM_SOURCES[name])
