from .cabling import cable_diagram, expand_signs
from .named_tangles import (
    braid,
    closure_diagram,
    cup,
    plat,
    plat_closure_diagram,
    trivial,
)
from .signed_boundary import SignedBoundary
from .slices import Cap, Crossing, CrossingKind, Cup, Slice
from .tangle_diagram import TangleDiagram
from .tangle_operations import compose, negate, power, reverse, tensor
from .tangle_parser import GRAMMAR_SUMMARY, format_tangle, load_tangle, parse_tangle

__all__ = [
    "GRAMMAR_SUMMARY",
    "Cap",
    "Crossing",
    "CrossingKind",
    "Cup",
    "SignedBoundary",
    "Slice",
    "TangleDiagram",
    "braid",
    "cable_diagram",
    "closure_diagram",
    "compose",
    "cup",
    "expand_signs",
    "format_tangle",
    "load_tangle",
    "negate",
    "parse_tangle",
    "plat",
    "plat_closure_diagram",
    "power",
    "reverse",
    "tensor",
    "trivial",
]
