from .amalgamation import amalgamate, amalgamate_with_renaming, tensor_morphisms
from .bordered_morphism import (
    BorderedMorphism,
    CapEvent,
    CrossingEvent,
    SweepRecord,
    cup_morphism,
    identity_morphism,
    plat_morphism,
    reverse_morphism,
)
from .presentation_format import (
    bordered_morphism_from_json,
    bordered_morphism_to_json,
    format_bordered_morphism,
    format_presentation,
    parse_bordered_morphism,
    parse_presentation,
    presentation_from_json,
    presentation_to_json,
)
from .quandle_presentation import QuandlePresentation, Relation, fresh_renaming
from .tietze import SimplificationResult, simplify_morphism, tietze_simplify

__all__ = [
    "BorderedMorphism",
    "CapEvent",
    "CrossingEvent",
    "QuandlePresentation",
    "Relation",
    "SimplificationResult",
    "SweepRecord",
    "amalgamate",
    "amalgamate_with_renaming",
    "bordered_morphism_from_json",
    "bordered_morphism_to_json",
    "cup_morphism",
    "format_bordered_morphism",
    "format_presentation",
    "fresh_renaming",
    "identity_morphism",
    "parse_bordered_morphism",
    "parse_presentation",
    "plat_morphism",
    "presentation_from_json",
    "presentation_to_json",
    "reverse_morphism",
    "simplify_morphism",
    "tensor_morphisms",
    "tietze_simplify",
]
