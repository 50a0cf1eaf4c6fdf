from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import final, overload, override


@final
@dataclass(frozen=True)
class SignedBoundary:
    """Orientation signs of the boundary points `p_1 < ... < p_n` of a tangle end."""

    signs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for sign in self.signs:
            if sign not in (1, -1):
                error_message = f"Boundary signs must be +1 or -1, got {sign}"
                raise ValueError(error_message)

    @classmethod
    def of(cls, signs: Iterable[int]) -> "SignedBoundary":
        return cls(tuple(signs))

    @classmethod
    def positive(cls, width: int) -> "SignedBoundary":
        return cls((1,) * width)

    @classmethod
    def parse(cls, text: str) -> "SignedBoundary":
        """Parse signs written as `+ -`, `+-` or `+,-`; an empty string is the empty boundary."""
        signs: list[int] = []

        for character in text:
            if character == "+":
                signs.append(1)
            elif character == "-":
                signs.append(-1)
            elif not character.isspace() and character not in ",()":
                error_message = f"Unexpected sign character '{character}'"
                raise ValueError(error_message)

        return cls(tuple(signs))

    @property
    def width(self) -> int:
        return len(self.signs)

    def negated(self) -> "SignedBoundary":
        return SignedBoundary(tuple(-sign for sign in self.signs))

    def reversed_negated(self) -> "SignedBoundary":
        """Return the boundary `p_i ↦ -φ(p_{n-i+1})` seen from the other side of a reflected tangle."""
        return SignedBoundary(tuple(-sign for sign in reversed(self.signs)))

    def __add__(self, other: "SignedBoundary") -> "SignedBoundary":
        return SignedBoundary(self.signs + other.signs)

    def __len__(self) -> int:
        return len(self.signs)

    def __iter__(self) -> Iterator[int]:
        return iter(self.signs)

    @overload
    def __getitem__(self, index: int) -> int: ...

    @overload
    def __getitem__(self, index: slice) -> "SignedBoundary": ...

    def __getitem__(self, index: int | slice) -> "int | SignedBoundary":
        if isinstance(index, slice):
            return SignedBoundary(self.signs[index])

        return self.signs[index]

    def to_text(self) -> str:
        """Return the signs separated by spaces, as in the tangle and presentation formats."""
        return " ".join("+" if sign > 0 else "-" for sign in self.signs)

    @override
    def __str__(self) -> str:
        return "(" + ",".join("+" if sign > 0 else "-" for sign in self.signs) + ")"
