import re

import pytest

from qtangle.corpus import COMPOSABLE_PAIRS, corpus_diagram
from qtangle.tangles.cabling import cable_diagram, copy_at, expand_signs
from qtangle.tangles.signed_boundary import SignedBoundary
from qtangle.tangles.tangle_operations import compose, negate
from qtangle.tangles.tangle_parser import parse_tangle

TREFOIL = "bottom +\ncup 2\nx 1\nx 1\nx 1\ncap 2\ntop +\n"


class TestCabling:
    def test_bundle_order_follows_orientation(self) -> None:
        assert [copy_at(1, offset, 3) for offset in range(3)] == [0, 1, 2]
        assert [copy_at(-1, offset, 3) for offset in range(3)] == [2, 1, 0]

    @pytest.mark.parametrize(
        argnames=("signs", "epsilon", "expected"),
        argvalues=[
            ((1,), (1, 1), (1, 1)),
            ((-1,), (1, 1), (-1, -1)),
            ((1,), (1, -1), (1, -1)),
            ((-1,), (1, -1), (1, -1)),
            ((1, -1), (1, -1), (1, -1, 1, -1)),
        ],
    )
    def test_expand_signs(
        self,
        signs: tuple[int, ...],
        epsilon: tuple[int, ...],
        expected: tuple[int, ...],
    ) -> None:
        assert expand_signs(SignedBoundary(signs), epsilon) == SignedBoundary(expected)

    def test_cable_multiplies_crossings(self) -> None:
        trefoil = parse_tangle(TREFOIL)

        cable = cable_diagram(trefoil, 2, (1, 1))

        assert cable.shape == (2, 2)
        assert cable.crossing_count == 12
        assert cable.cup_count == 2
        assert cable.cap_count == 2

    def test_cable_with_reversed_copy(self) -> None:
        trefoil = parse_tangle(TREFOIL)

        cable = cable_diagram(trefoil, 2, (1, -1))

        assert cable.bottom == SignedBoundary((1, -1))
        assert cable.crossing_count == 12

    @pytest.mark.parametrize(argnames=("first", "second"), argvalues=COMPOSABLE_PAIRS)
    @pytest.mark.parametrize(
        argnames="epsilon", argvalues=[(1,), (-1,), (1, 1), (1, -1)]
    )
    def test_cable_of_composite_stacks_cables(
        self, first: str, second: str, epsilon: tuple[int, ...]
    ) -> None:
        lower, upper = corpus_diagram(first), corpus_diagram(second)
        copies = len(epsilon)

        cabled = cable_diagram(compose(lower, upper), copies, epsilon)

        assert cabled == compose(
            cable_diagram(lower, copies, epsilon),
            cable_diagram(upper, copies, epsilon),
        )

    def test_single_copy_is_the_diagram(self) -> None:
        trefoil = parse_tangle(TREFOIL)

        assert cable_diagram(trefoil, 1, (1,)) == trefoil
        assert cable_diagram(trefoil, 1, (-1,)) == negate(trefoil)

    @pytest.mark.parametrize(
        argnames=("copies", "epsilon"),
        argvalues=[(0, ()), (2, (1,)), (2, (1, 2))],
    )
    def test_reject_invalid_cable_signs(
        self, copies: int, epsilon: tuple[int, ...]
    ) -> None:
        with pytest.raises(
            ValueError, match=re.escape("A cable needs one sign +1 or -1 per copy")
        ):
            cable_diagram(parse_tangle(TREFOIL), copies, epsilon)
