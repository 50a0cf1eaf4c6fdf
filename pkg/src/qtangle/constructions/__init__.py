from .braid_action import BraidAutomorphism, braid_action, parse_braid_word
from .cables import cable_presentation, satellite
from .closures import (
    classical_closure,
    connected_sum,
    periodic_link,
    plat_closure,
    rainbow_closure,
)

__all__ = [
    "BraidAutomorphism",
    "braid_action",
    "cable_presentation",
    "classical_closure",
    "connected_sum",
    "parse_braid_word",
    "periodic_link",
    "plat_closure",
    "rainbow_closure",
    "satellite",
]
