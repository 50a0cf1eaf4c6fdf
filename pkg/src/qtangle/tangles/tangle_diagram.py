from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Final, final

from qtangle.exceptions import TangleOrientationError, TangleWidthError
from qtangle.tangles.signed_boundary import SignedBoundary
from qtangle.tangles.slices import Cap, Crossing, Cup, Slice

type StrandReference = tuple[int, int]

_FIXED: Final = 0


@final
@dataclass(frozen=True)
class TangleDiagram:
    """An oriented tangle as a stack of elementary slices read from bottom to top.

    Construction checks the width of every level and propagates the strand
    orientations. Cups are stored with their resolved orientation, so two
    diagrams are equal exactly when their oriented slice lists are equal.

    Raises:
        TangleWidthError: A slice does not fit its level, or the last level differs from `top`.
        TangleOrientationError: The orientations cannot be made consistent.

    """

    bottom: SignedBoundary
    top: SignedBoundary
    slices: tuple[Slice, ...] = ()
    level_signs: tuple[tuple[int, ...], ...] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        _check_widths(self.bottom, self.top, self.slices)
        resolved = _OrientationSolver(self.bottom, self.top, self.slices).solve()
        object.__setattr__(self, "slices", resolved)
        object.__setattr__(self, "level_signs", _replay_signs(self.bottom, resolved))

    @classmethod
    def build(
        cls,
        bottom: SignedBoundary | Sequence[int],
        top: SignedBoundary | Sequence[int],
        slices: Sequence[Slice] = (),
    ) -> "TangleDiagram":
        return cls(_as_boundary(bottom), _as_boundary(top), tuple(slices))

    @classmethod
    def empty(cls) -> "TangleDiagram":
        return cls(SignedBoundary(), SignedBoundary())

    @property
    def widths(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.level_signs)

    @property
    def max_width(self) -> int:
        return max(self.widths)

    @property
    def crossing_count(self) -> int:
        return sum(1 for item in self.slices if isinstance(item, Crossing))

    @property
    def cup_count(self) -> int:
        return sum(1 for item in self.slices if isinstance(item, Cup))

    @property
    def cap_count(self) -> int:
        return sum(1 for item in self.slices if isinstance(item, Cap))

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.bottom), len(self.top))


def _as_boundary(signs: SignedBoundary | Sequence[int]) -> SignedBoundary:
    if isinstance(signs, SignedBoundary):
        return signs

    return SignedBoundary.of(signs)


def _check_widths(
    bottom: SignedBoundary, top: SignedBoundary, slices: Sequence[Slice]
) -> None:
    width = len(bottom)

    for slice_index, item in enumerate(slices):
        match item:
            case Cup(index=index):
                fits = 0 <= index <= width
            case Crossing(index=index) | Cap(index=index):
                fits = 0 <= index and index + 1 < width

        if not fits:
            error_message = f"{_describe(item)} does not fit a level of width {width}"
            raise TangleWidthError(error_message, slice_index=slice_index)

        width += item.width_change

    if width != len(top):
        error_message = (
            f"The last level has width {width}, "
            f"but the top declares {len(top)} points"
        )
        raise TangleWidthError(error_message, slice_index=len(slices))


def _describe(item: Slice) -> str:
    match item:
        case Crossing(index=index, kind=kind):
            return f"{kind.value} {index + 1}"
        case Cup(index=index):
            return f"cup {index + 1}"
        case Cap(index=index):
            return f"cap {index + 1}"


@final
class _OrientationSolver:
    """Union-find with parity over strand orientation variables.

    Variable 0 is the constant +1. A strand is a pair `(variable, parity)` whose
    sign is `parity * value(variable)`.
    """

    def __init__(
        self, bottom: SignedBoundary, top: SignedBoundary, slices: tuple[Slice, ...]
    ) -> None:
        self._bottom = bottom
        self._top = top
        self._slices = slices
        self._parent: list[int] = [_FIXED]
        self._parity: list[int] = [1]

    def solve(self) -> tuple[Slice, ...]:
        strands: list[StrandReference] = [(_FIXED, sign) for sign in self._bottom]
        cup_variables: dict[int, int] = {}

        for slice_index, item in enumerate(self._slices):
            match item:
                case Crossing(index=index):
                    strands[index : index + 2] = strands[index + 1], strands[index]
                case Cup(index=index, orientation=orientation):
                    variable = self._new_variable()
                    cup_variables[slice_index] = variable

                    if orientation is not None:
                        if orientation not in (1, -1):
                            error_message = (
                                f"Cup orientation must be +1 or -1, got {orientation}"
                            )
                            raise TangleOrientationError(
                                error_message, slice_index=slice_index
                            )

                        self._require(variable, _FIXED, orientation, slice_index)

                    strands[index:index] = [(variable, 1), (variable, -1)]
                case Cap(index=index):
                    left_variable, left_parity = strands[index]
                    right_variable, right_parity = strands[index + 1]
                    # a cap joins an upward strand to a downward one
                    self._require(
                        left_variable,
                        right_variable,
                        -left_parity * right_parity,
                        slice_index,
                    )
                    del strands[index : index + 2]

        for position, (variable, parity) in enumerate(strands):
            sign = "+" if self._top[position] > 0 else "-"
            self._require(
                variable,
                _FIXED,
                parity * self._top[position],
                len(self._slices),
                f"Top point {position + 1} cannot have sign {sign}",
            )

        resolved: list[Slice] = list(self._slices)

        for slice_index, variable in cup_variables.items():
            root, parity = self._find(variable)

            if root != _FIXED:
                # a closed component with no constraint is oriented with its left strand up
                self._require(variable, _FIXED, 1, slice_index)
                parity = 1

            resolved[slice_index] = Cup(resolved[slice_index].index, parity)

        return tuple(resolved)

    def _new_variable(self) -> int:
        self._parent.append(len(self._parent))
        self._parity.append(1)
        return len(self._parent) - 1

    def _find(self, variable: int) -> tuple[int, int]:
        parity = 1
        path: list[int] = []

        while self._parent[variable] != variable:
            path.append(variable)
            parity *= self._parity[variable]
            variable = self._parent[variable]

        root = variable
        accumulated = parity

        for node in path:
            node_parity = self._parity[node]
            self._parent[node] = root
            self._parity[node] = accumulated
            accumulated *= node_parity

        return root, parity

    def _require(
        self,
        first: int,
        second: int,
        relation: int,
        slice_index: int,
        message: str | None = None,
    ) -> None:
        """Record `value(first) = relation * value(second)`."""
        first_root, first_parity = self._find(first)
        second_root, second_parity = self._find(second)

        if first_root == second_root:
            if first_parity != relation * second_parity:
                error_message = message or "Strand orientations are inconsistent"
                raise TangleOrientationError(error_message, slice_index=slice_index)

            return

        link = first_parity * relation * second_parity

        if first_root == _FIXED:
            self._parent[second_root] = first_root
        else:
            self._parent[first_root] = second_root
            self._parity[first_root] = link
            return

        self._parity[second_root] = link


def _replay_signs(
    bottom: SignedBoundary, slices: tuple[Slice, ...]
) -> tuple[tuple[int, ...], ...]:
    signs = list(bottom)
    levels = [tuple(signs)]

    for item in slices:
        match item:
            case Crossing(index=index):
                signs[index], signs[index + 1] = signs[index + 1], signs[index]
            case Cup(index=index, orientation=orientation):
                orientation = orientation or 1
                signs[index:index] = [orientation, -orientation]
            case Cap(index=index):
                del signs[index : index + 2]

        levels.append(tuple(signs))

    return tuple(levels)
