import re

import pytest

from qtangle.tangles.signed_boundary import SignedBoundary


class TestSignedBoundary:
    @pytest.mark.parametrize(argnames="text", argvalues=["+ -", "+-", "+,-", "(+,-)"])
    def test_parse_signs(self, text: str) -> None:
        assert SignedBoundary.parse(text) == SignedBoundary((1, -1))

    def test_parse_empty_boundary(self) -> None:
        assert SignedBoundary.parse("  ").width == 0

    def test_reject_unknown_sign_character(self) -> None:
        with pytest.raises(
            ValueError, match=re.escape("Unexpected sign character 'x'")
        ):
            SignedBoundary.parse("+x")

    def test_reject_sign_that_is_not_unit(self) -> None:
        with pytest.raises(
            ValueError, match=re.escape("Boundary signs must be +1 or -1, got 2")
        ):
            SignedBoundary((2,))

    def test_render_boundary(self) -> None:
        boundary = SignedBoundary.of([1, -1, 1])

        assert str(boundary) == "(+,-,+)"
        assert boundary.to_text() == "+ - +"

    def test_flip_boundary(self) -> None:
        boundary = SignedBoundary((1, 1, -1))

        assert boundary.negated() == SignedBoundary((-1, -1, 1))
        assert boundary.reversed_negated() == SignedBoundary((1, -1, -1))

    def test_concatenate_and_slice(self) -> None:
        boundary = SignedBoundary.positive(2) + SignedBoundary((-1,))

        assert boundary.signs == (1, 1, -1)
        assert boundary[2] == -1
        assert boundary[1:] == SignedBoundary((1, -1))
        assert list(boundary) == [1, 1, -1]
        assert len(boundary) == 3
