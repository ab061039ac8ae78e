__all__ = [
    "Signal",
    "Spectrum",
    "TwiddleTable",
    "to_signal",
    "to_spectrum",
    "FftPlan",
    "Algorithm",
    "OpCount",
    "BenchRecord",
    "CostModelFit",
    "RecurrenceLevel",
    "RecurrenceReport",
    "Panel",
    "CombineSign",
    "CirclePlacement",
    "DecompositionFigure",
    "RenderStyle",
]

from .signal import Signal, Spectrum, TwiddleTable, to_signal, to_spectrum
from .plan import FftPlan
from .cost import Algorithm, BenchRecord, CostModelFit, OpCount, RecurrenceLevel, RecurrenceReport
from .geometry import CirclePlacement, CombineSign, DecompositionFigure, Panel
from .style import RenderStyle
