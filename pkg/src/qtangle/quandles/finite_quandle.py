import itertools
from collections import deque
from collections.abc import Sequence
from pathlib import Path
from typing import Final, final, override

import numpy as np
import numpy.typing as npt

from qtangle.exceptions import (
    InvalidQuandleTableError,
    QuandleAxiom,
    QuandleAxiomError,
)

type OperationTable = npt.NDArray[np.int64]


@final
class FiniteQuandle:
    """A validated operation table `table[x][y] = x ▷ y` on the elements `0..n-1`."""

    _name: Final[str]
    _table: Final[OperationTable]
    _inverse_table: Final[OperationTable]
    _rows: Final[tuple[tuple[int, ...], ...]]
    _inverse_rows: Final[tuple[tuple[int, ...], ...]]

    def __init__(
        self, name: str, table: OperationTable, inverse_table: OperationTable
    ) -> None:
        self._name = name
        self._table = table
        self._inverse_table = inverse_table
        self._table.setflags(write=False)
        self._inverse_table.setflags(write=False)
        self._rows = tuple(tuple(int(value) for value in row) for row in table)
        self._inverse_rows = tuple(
            tuple(int(value) for value in row) for row in inverse_table
        )

    @property
    def name(self) -> str:
        return self._name

    @property
    def size(self) -> int:
        return len(self._rows)

    @property
    def table(self) -> OperationTable:
        return self._table

    @property
    def inv_table(self) -> OperationTable:
        """Cached `x ◁ y`, the inverse of every column map."""
        return self._inverse_table

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    @property
    def inverse_rows(self) -> tuple[tuple[int, ...], ...]:
        return self._inverse_rows

    def op(self, x: int, y: int) -> int:
        return self._rows[x][y]

    def inverse_op(self, x: int, y: int) -> int:
        return self._inverse_rows[x][y]

    def column(self, y: int) -> tuple[int, ...]:
        return tuple(row[y] for row in self._rows)

    def to_table_text(self) -> str:
        lines = [str(self.size)]
        lines.extend(" ".join(str(value) for value in row) for row in self._rows)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_table_text(cls, text: str, name: str) -> "FiniteQuandle":
        """Parse the table file format: `n`, then n lines of n space-separated integers."""
        lines = [line.strip() for line in text.splitlines() if line.strip()]

        if len(lines) == 0:
            raise InvalidQuandleTableError("the table text is empty")

        try:
            size = int(lines[0])
            rows = [[int(value) for value in line.split()] for line in lines[1:]]
        except ValueError as error:
            raise InvalidQuandleTableError("entries must be integers") from error

        if len(rows) != size:
            error_message = f"expected {size} rows, found {len(rows)}"
            raise InvalidQuandleTableError(error_message)

        return validate_quandle(rows, name=name)

    @override
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteQuandle):
            return NotImplemented

        return self._rows == other._rows

    @override
    def __hash__(self) -> int:
        return hash(self._rows)

    @override
    def __repr__(self) -> str:
        return f"FiniteQuandle(name={self._name!r}, size={self.size})"


def validate_quandle(
    table: Sequence[Sequence[int]] | OperationTable, name: str = "table"
) -> FiniteQuandle:
    """Check the three quandle axioms and return the quandle with its inverse table.

    Raises:
        InvalidQuandleTableError: The table is not square or has entries outside `0..n-1`.
        QuandleAxiomError: The first violated axiom, with a witness.

    """
    array = _as_square_array(table)
    size = array.shape[0]
    elements = np.arange(size)

    diagonal = array[elements, elements]
    idempotency_failures = np.flatnonzero(diagonal != elements)

    if idempotency_failures.size > 0:
        x = int(idempotency_failures[0])
        raise QuandleAxiomError(QuandleAxiom.IDEMPOTENCY, (x,))

    for y in range(size):
        column = array[:, y]

        if np.unique(column).size != size:
            raise QuandleAxiomError(
                QuandleAxiom.RIGHT_INVERTIBILITY, _collision_witness(column, y)
            )

    # left[x, y, z] = (x ▷ y) ▷ z and right[x, y, z] = (x ▷ z) ▷ (y ▷ z)
    left = array[array[:, :, np.newaxis], elements[np.newaxis, np.newaxis, :]]
    right = array[array[:, np.newaxis, :], array[np.newaxis, :, :]]
    distributivity_failures = np.argwhere(left != right)

    if distributivity_failures.size > 0:
        x, y, z = (int(value) for value in distributivity_failures[0])
        raise QuandleAxiomError(QuandleAxiom.SELF_DISTRIBUTIVITY, (x, y, z))

    inverse = np.empty_like(array)
    inverse[array, elements[np.newaxis, :]] = elements[:, np.newaxis]
    return FiniteQuandle(name, array, inverse)


def dihedral_quandle(n: int) -> FiniteQuandle:
    """Return the dihedral quandle `x ▷ y = (2y - x) mod n`."""
    if n < 1:
        error_message = f"dihedral order must be positive, got {n}"
        raise InvalidQuandleTableError(error_message)

    elements = np.arange(n)
    table = (2 * elements[np.newaxis, :] - elements[:, np.newaxis]) % n
    return validate_quandle(table, name=f"dihedral:{n}")


def conjugation_quandle_sym3() -> FiniteQuandle:
    """Return the conjugation quandle `a ▷ b = b⁻¹ a b` of the permutations of three letters."""
    permutations = list(itertools.permutations(range(3)))
    index = {permutation: position for position, permutation in enumerate(permutations)}

    def compose(
        first: tuple[int, ...], second: tuple[int, ...]
    ) -> tuple[int, ...]:
        # apply `first`, then `second`
        return tuple(second[first[letter]] for letter in range(3))

    def invert(permutation: tuple[int, ...]) -> tuple[int, ...]:
        inverse = [0, 0, 0]

        for letter, image in enumerate(permutation):
            inverse[image] = letter

        return tuple(inverse)

    table = [
        [index[compose(compose(invert(b), a), b)] for b in permutations]
        for a in permutations
    ]
    return validate_quandle(table, name="conj-sym3")


def load_quandle_table(path: Path) -> FiniteQuandle:
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as error:
        error_message = f"cannot read '{path}'"
        raise InvalidQuandleTableError(error_message) from error

    return FiniteQuandle.from_table_text(text, name=path.stem)


def is_connected(quandle: FiniteQuandle) -> bool:
    """Check whether the inner automorphism group acts transitively, by orbit saturation from 0."""
    if quandle.size <= 1:
        return True

    seen = {0}
    frontier = deque([0])

    while frontier:
        x = frontier.popleft()

        for y in range(quandle.size):
            for image in (quandle.op(x, y), quandle.inverse_op(x, y)):
                if image not in seen:
                    seen.add(image)
                    frontier.append(image)

    return len(seen) == quandle.size


def is_faithful(quandle: FiniteQuandle) -> bool:
    """Check whether distinct elements act by distinct column maps."""
    columns = {quandle.column(y) for y in range(quandle.size)}
    return len(columns) == quandle.size


def _as_square_array(table: Sequence[Sequence[int]] | OperationTable) -> OperationTable:
    try:
        array = np.array(table, dtype=np.int64)
    except (TypeError, ValueError) as error:
        raise InvalidQuandleTableError("rows must have equal length") from error

    if array.ndim != 2 or array.shape[0] != array.shape[1]:  # noqa: PLR2004
        raise InvalidQuandleTableError("the table must be square")

    size = array.shape[0]

    if size == 0:
        raise InvalidQuandleTableError("the table must have at least one element")

    if array.min() < 0 or array.max() >= size:
        error_message = f"entries must lie in 0..{size - 1}"
        raise InvalidQuandleTableError(error_message)

    return array


def _collision_witness(column: OperationTable, y: int) -> tuple[int, int, int]:
    first_row: dict[int, int] = {}

    for x, value in enumerate(column):
        value = int(value)  # noqa: PLW2901

        if value in first_row:
            return (first_row[value], x, y)

        first_row[value] = x

    error_message = "column is a bijection"
    raise AssertionError(error_message)
