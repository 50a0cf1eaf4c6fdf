from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import final, override

type Letter = tuple[str, int]


@final
@dataclass(frozen=True)
class FreeGroupWord:
    """A freely reduced word over named generators, as `(name, ±1)` letters."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", _reduce(self.letters))

    @classmethod
    def identity(cls) -> "FreeGroupWord":
        return cls()

    @classmethod
    def letter(cls, name: str, exponent: int = 1) -> "FreeGroupWord":
        return cls(((name, 1 if exponent > 0 else -1),))

    @property
    def is_identity(self) -> bool:
        return len(self.letters) == 0

    def inverse(self) -> "FreeGroupWord":
        return FreeGroupWord(
            tuple((name, -exponent) for name, exponent in reversed(self.letters))
        )

    def conjugate_by(self, other: "FreeGroupWord") -> "FreeGroupWord":
        """Return `other⁻¹ · self · other`."""
        return other.inverse() * self * other

    def generators(self) -> frozenset[str]:
        return frozenset(name for name, _ in self.letters)

    def __mul__(self, other: "FreeGroupWord") -> "FreeGroupWord":
        return FreeGroupWord(self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    @override
    def __str__(self) -> str:
        if self.is_identity:
            return "1"

        return "".join(
            name if exponent > 0 else f"{name}^-1" for name, exponent in self.letters
        )


def _reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []

    for name, exponent in letters:
        if stack and stack[-1] == (name, -exponent):
            stack.pop()
        else:
            stack.append((name, exponent))

    return tuple(stack)
