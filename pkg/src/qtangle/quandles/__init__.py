from .finite_quandle import (
    FiniteQuandle,
    conjugation_quandle_sym3,
    dihedral_quandle,
    is_connected,
    is_faithful,
    load_quandle_table,
    validate_quandle,
)
from .free_group_word import FreeGroupWord
from .free_quandle import FreeQuandleElement, fq_op, from_term
from .quandle_registry import resolve_quandle, standard_quandles
from .quandle_term import (
    GeneratorTerm,
    OperationTerm,
    QuandleTerm,
    TermOperator,
    eval_term,
    generator,
)

__all__ = [
    "FiniteQuandle",
    "FreeGroupWord",
    "FreeQuandleElement",
    "GeneratorTerm",
    "OperationTerm",
    "QuandleTerm",
    "TermOperator",
    "conjugation_quandle_sym3",
    "dihedral_quandle",
    "eval_term",
    "fq_op",
    "from_term",
    "generator",
    "is_connected",
    "is_faithful",
    "load_quandle_table",
    "resolve_quandle",
    "standard_quandles",
    "validate_quandle",
]
