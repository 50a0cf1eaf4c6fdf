from collections.abc import Sequence

from qtangle.exceptions import (
    BoundaryMismatchError,
    IllegalSignPatternError,
    IndexOutOfRangeError,
)
from qtangle.tangles.signed_boundary import SignedBoundary
from qtangle.tangles.slices import Crossing, CrossingKind, Cup
from qtangle.tangles.tangle_diagram import TangleDiagram
from qtangle.tangles.tangle_operations import compose, reverse, tensor


def trivial(signs: SignedBoundary | Sequence[int]) -> TangleDiagram:
    """Return the tangle of straight vertical strands with the given orientations."""
    return TangleDiagram.build(signs, signs)


def cup(signs: SignedBoundary | Sequence[int]) -> TangleDiagram:
    """Return the rainbow of nested cups whose top reads `signs`.

    Raises:
        IllegalSignPatternError: `signs` has odd length or `φ(p_i) != -φ(p_{2k-i+1})`.

    """
    boundary = SignedBoundary.of(signs)
    width = len(boundary)

    if width % 2 != 0 or boundary != boundary.reversed_negated():
        raise IllegalSignPatternError(boundary.signs, "cup tangle")

    slices = [Cup(index, boundary[index]) for index in range(width // 2)]
    return TangleDiagram.build(SignedBoundary(), boundary, slices)


def plat(signs: SignedBoundary | Sequence[int]) -> TangleDiagram:
    """Return side-by-side cups joining the points `p_{2i-1}` and `p_{2i}`.

    Raises:
        IllegalSignPatternError: `signs` has odd length or `φ(p_{2i}) != -φ(p_{2i-1})`.

    """
    boundary = SignedBoundary.of(signs)
    width = len(boundary)

    if width % 2 != 0 or any(
        boundary[index] != -boundary[index + 1] for index in range(0, width, 2)
    ):
        raise IllegalSignPatternError(boundary.signs, "plat tangle")

    slices = [Cup(index, boundary[index]) for index in range(0, width, 2)]
    return TangleDiagram.build(SignedBoundary(), boundary, slices)


def braid(strands: int, word: Sequence[int]) -> TangleDiagram:
    """Return the upward braid of a word in the generators `σ_i` (`i`) and `σ_i⁻¹` (`-i`).

    Raises:
        IndexOutOfRangeError: A letter is not in `1..strands-1`.

    """
    slices: list[Crossing] = []

    for letter in word:
        if not 1 <= abs(letter) <= strands - 1:
            raise IndexOutOfRangeError(letter, strands)

        kind = CrossingKind.POSITIVE if letter > 0 else CrossingKind.NEGATIVE
        slices.append(Crossing(abs(letter) - 1, kind))

    boundary = SignedBoundary.positive(strands)
    return TangleDiagram.build(boundary, boundary, slices)


def closure_diagram(diagram: TangleDiagram) -> TangleDiagram:
    """Close a `(φ, φ)`-tangle by strands running around its right side."""
    if diagram.bottom != diagram.top:
        raise BoundaryMismatchError(diagram.bottom.signs, diagram.top.signs)

    returning = diagram.bottom.reversed_negated()
    rainbow = cup(diagram.bottom + returning)
    body = tensor(diagram, trivial(returning))
    return compose(compose(rainbow, body), reverse(rainbow))


def plat_closure_diagram(diagram: TangleDiagram) -> TangleDiagram:
    """Close a tangle by plat cups below and plat caps above."""
    below = plat(diagram.bottom)
    above = reverse(plat(diagram.top.reversed_negated()))
    return compose(compose(below, diagram), above)
