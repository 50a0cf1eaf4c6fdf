from qtangle.exceptions import BoundaryMismatchError
from qtangle.tangles.slices import Cap, Crossing, Cup, Slice
from qtangle.tangles.tangle_diagram import TangleDiagram


def compose(first: TangleDiagram, second: TangleDiagram) -> TangleDiagram:
    """Stack `second` on top of `first`."""
    if first.top != second.bottom:
        raise BoundaryMismatchError(first.top.signs, second.bottom.signs)

    return TangleDiagram(first.bottom, second.top, first.slices + second.slices)


def tensor(first: TangleDiagram, second: TangleDiagram) -> TangleDiagram:
    """Place `second` to the right of `first`; `first` is drawn below `second`."""
    offset = len(first.top)
    slices = first.slices + tuple(item.shifted(offset) for item in second.slices)
    return TangleDiagram(first.bottom + second.bottom, first.top + second.top, slices)


def reverse(diagram: TangleDiagram) -> TangleDiagram:
    """Rotate the diagram by a half turn in the plane of projection.

    Slices are read in the opposite order, positions are mirrored, cups and caps
    trade places and the new bottom reads `p_i ↦ -φ(p_{m-i+1})` of the old top.
    """
    reflected: list[Slice] = []

    for position in reversed(range(len(diagram.slices))):
        item = diagram.slices[position]
        below = diagram.level_signs[position]
        wider = max(len(below), len(diagram.level_signs[position + 1]))
        mirrored_index = wider - 2 - item.index

        match item:
            case Crossing(kind=kind):
                reflected.append(Crossing(mirrored_index, kind))
            case Cup():
                reflected.append(Cap(mirrored_index))
            case Cap(index=index):
                reflected.append(Cup(mirrored_index, below[index]))

    return TangleDiagram(
        diagram.top.reversed_negated(),
        diagram.bottom.reversed_negated(),
        tuple(reflected),
    )


def negate(diagram: TangleDiagram) -> TangleDiagram:
    """Reverse the orientation of every component."""
    slices = tuple(
        Cup(item.index, -(item.orientation or 1)) if isinstance(item, Cup) else item
        for item in diagram.slices
    )
    return TangleDiagram(diagram.bottom.negated(), diagram.top.negated(), slices)


def power(diagram: TangleDiagram, exponent: int) -> TangleDiagram:
    if exponent < 1:
        error_message = f"Power must be at least 1, got {exponent}"
        raise ValueError(error_message)

    result = diagram

    for _ in range(exponent - 1):
        result = compose(result, diagram)

    return result
