import random

import pytest

from qtangle.exceptions import LocatedError
from qtangle.tangles.signed_boundary import SignedBoundary
from qtangle.tangles.slices import Cap, Crossing, CrossingKind, Cup, Slice
from qtangle.tangles.tangle_diagram import TangleDiagram

TREFOIL_SLICES = (Cup(1), Crossing(0), Crossing(0), Crossing(0), Cap(1))


def _random_slices(source: random.Random, width: int) -> tuple[list[Slice], int]:
    slices: list[Slice] = []

    for _ in range(source.randint(0, 8)):
        index = source.randint(-1, width)
        shape = source.randrange(3)

        if shape == 0:
            slices.append(Crossing(index, source.choice(tuple(CrossingKind))))
        elif shape == 1:
            slices.append(Cup(index, source.choice((None, 1, -1))))
            width += 2
        else:
            slices.append(Cap(index))
            width = max(width - 2, 0)

    return slices, width


class TestTangleDiagram:
    def test_measure_diagram(self) -> None:
        diagram = TangleDiagram.build([1], [1], TREFOIL_SLICES)

        assert diagram.widths == (1, 3, 3, 3, 3, 1)
        assert diagram.max_width == 3
        assert diagram.crossing_count == 3
        assert diagram.cup_count == 1
        assert diagram.cap_count == 1
        assert diagram.shape == (1, 1)

    def test_resolve_cup_orientation(self) -> None:
        diagram = TangleDiagram.build([1], [1], TREFOIL_SLICES)

        assert diagram.slices[0] == Cup(1, 1)
        assert diagram == TangleDiagram.build(
            [1], [1], (Cup(1, 1), *TREFOIL_SLICES[1:])
        )

    def test_orient_free_component_upward_on_the_left(self) -> None:
        diagram = TangleDiagram.build([], [], [Cup(0), Cap(0)])

        assert diagram.slices == (Cup(0, 1), Cap(0))
        assert diagram.level_signs == ((), (1, -1), ())

    def test_track_signs_through_crossings(self) -> None:
        diagram = TangleDiagram.build(
            [1, -1], [-1, 1], [Crossing(0, CrossingKind.NEGATIVE)]
        )

        assert diagram.level_signs == ((1, -1), (-1, 1))

    def test_empty_diagram(self) -> None:
        diagram = TangleDiagram.empty()

        assert diagram.shape == (0, 0)
        assert diagram.bottom == SignedBoundary()
        assert diagram.widths == (0,)

    def test_mirror_crossing_kind(self) -> None:
        assert CrossingKind.POSITIVE.mirrored() is CrossingKind.NEGATIVE
        assert CrossingKind.NEGATIVE.mirrored() is CrossingKind.POSITIVE

    def test_shift_slices(self) -> None:
        shifted = Crossing(0, CrossingKind.NEGATIVE).shifted(2)

        assert shifted == Crossing(2, CrossingKind.NEGATIVE)
        assert Cup(1, -1).shifted(1) == Cup(2, -1)
        assert Cap(0).shifted(3) == Cap(3)

    @pytest.mark.parametrize(argnames="seed", argvalues=range(40))
    def test_random_stack_builds_or_points_at_a_slice(self, seed: int) -> None:
        source = random.Random(seed)
        bottom = [source.choice((1, -1)) for _ in range(source.randint(0, 4))]
        slices, width = _random_slices(source, len(bottom))
        top = [source.choice((1, -1)) for _ in range(width)]

        outcome: TangleDiagram | LocatedError
        try:
            outcome = TangleDiagram.build(bottom, top, slices)
        except LocatedError as error:
            outcome = error

        if isinstance(outcome, LocatedError):
            assert outcome.slice_index is not None
            assert 0 <= outcome.slice_index <= len(slices)
        else:
            assert outcome.widths[0] == len(bottom)
            assert outcome.widths[-1] == len(top)
