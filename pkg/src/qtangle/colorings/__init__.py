from .coloring_enumerator import (
    Coloring,
    ColoringEnumeration,
    count_colorings,
    endpoint_colors,
    enumerate_colorings,
)
from .coloring_report import ColoringReport, QuandleSummary, coloring_report

__all__ = [
    "Coloring",
    "ColoringEnumeration",
    "ColoringReport",
    "QuandleSummary",
    "coloring_report",
    "count_colorings",
    "endpoint_colors",
    "enumerate_colorings",
]
