import logging
import re
from functools import cache
from pathlib import Path
from typing import Final

from qtangle.exceptions import UnknownQuandleError
from qtangle.quandles.finite_quandle import (
    FiniteQuandle,
    conjugation_quandle_sym3,
    dihedral_quandle,
    load_quandle_table,
)

logger = logging.getLogger(__name__)

MAX_DIHEDRAL_ORDER: Final = 64
CONJUGATION_SYM3: Final = "conj-sym3"
_DIHEDRAL_PATTERN: Final = re.compile(r"dihedral:(\d+)")


def resolve_quandle(spec: str) -> FiniteQuandle:
    """Resolve `dihedral:n`, `conj-sym3` or the path of a table file to a finite quandle."""
    spec = spec.strip()
    match = _DIHEDRAL_PATTERN.fullmatch(spec)

    if match is not None:
        order = int(match.group(1))

        if not 1 <= order <= MAX_DIHEDRAL_ORDER:
            raise UnknownQuandleError(spec)

        return _builtin_dihedral(order)

    if spec == CONJUGATION_SYM3:
        return _builtin_conjugation_sym3()

    path = Path(spec)

    if not path.is_file():
        raise UnknownQuandleError(spec)

    logger.debug("Loading quandle table from %s", path)
    return load_quandle_table(path)


def standard_quandles() -> tuple[FiniteQuandle, ...]:
    """Return the standard coloring targets: dihedral(3), dihedral(4), dihedral(5) and conj-sym3."""
    return (
        _builtin_dihedral(3),
        _builtin_dihedral(4),
        _builtin_dihedral(5),
        _builtin_conjugation_sym3(),
    )


@cache
def _builtin_dihedral(order: int) -> FiniteQuandle:
    return dihedral_quandle(order)


@cache
def _builtin_conjugation_sym3() -> FiniteQuandle:
    return conjugation_quandle_sym3()
