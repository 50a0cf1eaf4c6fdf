import re

import pytest

from qtangle.exceptions import (
    BoundaryMismatchError,
    IllegalSignPatternError,
    IndexOutOfRangeError,
)
from qtangle.tangles.named_tangles import (
    braid,
    closure_diagram,
    cup,
    plat,
    plat_closure_diagram,
    trivial,
)
from qtangle.tangles.signed_boundary import SignedBoundary
from qtangle.tangles.slices import Crossing, CrossingKind, Cup
from qtangle.tangles.tangle_parser import parse_tangle


class TestNamedTangles:
    def test_trivial_tangle(self) -> None:
        diagram = trivial([1, -1])

        assert diagram.shape == (2, 2)
        assert diagram.slices == ()

    def test_cup_tangle_nests_cups(self) -> None:
        diagram = cup([1, 1, -1, -1])

        assert diagram.shape == (0, 4)
        assert diagram.slices == (Cup(0, 1), Cup(1, 1))
        assert diagram.top == SignedBoundary((1, 1, -1, -1))

    @pytest.mark.parametrize(
        argnames="signs", argvalues=[[1, 1], [1, -1, 1], [1, 1, 1, 1]]
    )
    def test_reject_illegal_cup_pattern(self, signs: list[int]) -> None:
        with pytest.raises(
            IllegalSignPatternError, match=re.escape("does not admit a cup tangle")
        ):
            cup(signs)

    def test_plat_tangle_places_cups_side_by_side(self) -> None:
        diagram = plat([1, -1, -1, 1])

        assert diagram.slices == (Cup(0, 1), Cup(2, -1))
        assert diagram.top == SignedBoundary((1, -1, -1, 1))

    def test_reject_illegal_plat_pattern(self) -> None:
        with pytest.raises(
            IllegalSignPatternError,
            match=re.escape("Sign pattern (+,+) does not admit a plat tangle"),
        ):
            plat([1, 1])

    def test_braid_from_word(self) -> None:
        diagram = braid(3, [1, -2])

        assert diagram.slices == (
            Crossing(0, CrossingKind.POSITIVE),
            Crossing(1, CrossingKind.NEGATIVE),
        )
        assert diagram.bottom == SignedBoundary.positive(3)

    def test_reject_braid_letter_out_of_range(self) -> None:
        with pytest.raises(
            IndexOutOfRangeError,
            match=re.escape("Index 2 is out of range for a level of width 2"),
        ):
            braid(2, [2])

    def test_closure_is_closed(self) -> None:
        diagram = closure_diagram(braid(2, [1, 1, 1]))

        assert diagram.shape == (0, 0)
        assert diagram.crossing_count == 3
        assert diagram.cup_count == 2
        assert diagram.cap_count == 2

    def test_closure_keeps_downward_strands(self) -> None:
        diagram = closure_diagram(trivial([-1]))

        assert diagram.shape == (0, 0)
        assert diagram.cup_count == 1

    def test_reject_closure_of_mismatched_ends(self) -> None:
        with pytest.raises(BoundaryMismatchError):
            closure_diagram(parse_tangle("bottom + -\ncap 1\ncup 1 -\ntop - +\n"))

    def test_plat_closure_is_closed(self) -> None:
        diagram = plat_closure_diagram(
            parse_tangle("bottom + - - +\nx 2\nx 2\nx 2\ntop + - - +\n")
        )

        assert diagram.shape == (0, 0)
        assert diagram.cup_count == 2
        assert diagram.cap_count == 2
        assert diagram.crossing_count == 3
