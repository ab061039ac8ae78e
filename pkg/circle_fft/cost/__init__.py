__all__ = [
    "expected_counts",
    "measure_counts",
    "verify_recurrence",
    "run_benchmark",
    "time_transform",
    "fit_cost_model",
]

from .accounting import expected_counts, measure_counts, verify_recurrence
from .benchmark import fit_cost_model, run_benchmark, time_transform
