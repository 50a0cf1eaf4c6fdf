from .colorings.coloring_enumerator import count_colorings, enumerate_colorings
from .constructions.cables import cable_presentation, satellite
from .constructions.closures import (
    classical_closure,
    connected_sum,
    periodic_link,
    plat_closure,
)
from .fundamental_quandle import bq
from .presentations.amalgamation import amalgamate
from .presentations.bordered_morphism import BorderedMorphism
from .presentations.quandle_presentation import QuandlePresentation, Relation
from .presentations.tietze import tietze_simplify
from .quandles.finite_quandle import FiniteQuandle, dihedral_quandle, validate_quandle
from .quandles.quandle_registry import resolve_quandle
from .tangles.tangle_diagram import TangleDiagram
from .tangles.tangle_operations import compose, tensor
from .tangles.tangle_parser import parse_tangle

__all__ = [
    "BorderedMorphism",
    "FiniteQuandle",
    "QuandlePresentation",
    "Relation",
    "TangleDiagram",
    "amalgamate",
    "bq",
    "cable_presentation",
    "classical_closure",
    "compose",
    "connected_sum",
    "count_colorings",
    "dihedral_quandle",
    "enumerate_colorings",
    "parse_tangle",
    "periodic_link",
    "plat_closure",
    "resolve_quandle",
    "satellite",
    "tensor",
    "tietze_simplify",
    "validate_quandle",
]
