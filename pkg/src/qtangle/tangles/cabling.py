from collections.abc import Sequence

from qtangle.tangles.signed_boundary import SignedBoundary
from qtangle.tangles.slices import Cap, Crossing, Cup, Slice
from qtangle.tangles.tangle_diagram import TangleDiagram


def copy_at(sign: int, offset: int, copies: int) -> int:
    """Return the copy index found at `offset` inside the bundle of a strand with this sign.

    Bundles follow the oriented blackboard push-off: upward strands list copies
    left to right, downward strands right to left.
    """
    return offset if sign > 0 else copies - 1 - offset


def expand_signs(boundary: SignedBoundary, epsilon: Sequence[int]) -> SignedBoundary:
    copies = len(epsilon)
    return SignedBoundary(
        tuple(
            sign * epsilon[copy_at(sign, offset, copies)]
            for sign in boundary
            for offset in range(copies)
        )
    )


def cable_diagram(
    diagram: TangleDiagram, copies: int, epsilon: Sequence[int]
) -> TangleDiagram:
    """Replace every strand by `copies` parallel copies, copy j reoriented by `epsilon[j]`.

    A crossing becomes the grid of `copies²` crossings of the same kind, and a cup or
    cap becomes `copies` nested cups or caps.
    """
    if copies < 1 or len(epsilon) != copies or not set(epsilon) <= {1, -1}:
        error_message = (
            f"A cable needs one sign +1 or -1 per copy, "
            f"got {copies} copies with signs {tuple(epsilon)}"
        )
        raise ValueError(error_message)

    slices: list[Slice] = []

    for item in diagram.slices:
        start = copies * item.index

        match item:
            case Crossing(kind=kind):
                for row in range(copies):
                    row_start = start + row
                    slices.extend(
                        Crossing(position, kind)
                        for position in reversed(range(row_start, row_start + copies))
                    )
            case Cup(orientation=orientation):
                sign = orientation or 1
                slices.extend(
                    Cup(start + offset, sign * epsilon[copy_at(sign, offset, copies)])
                    for offset in range(copies)
                )
            case Cap():
                slices.extend(
                    Cap(position) for position in reversed(range(start, start + copies))
                )

    return TangleDiagram(
        expand_signs(diagram.bottom, epsilon),
        expand_signs(diagram.top, epsilon),
        tuple(slices),
    )
