__all__ = [
    "complex_add",
    "complex_mul",
    "twiddle_table",
    "is_power_of_two",
    "log2_exact",
    "naive_dft",
    "naive_idft",
    "direct_sum",
    "butterfly",
    "make_plan",
    "fft",
    "fft_recursive",
    "fft_iterative",
    "fft_batch",
    "fft_stages",
    "ifft",
]

from .numeric import complex_add, complex_mul, is_power_of_two, log2_exact, twiddle_table
from .dft import direct_sum, naive_dft, naive_idft
from .fft import butterfly, fft, fft_batch, fft_iterative, fft_recursive, fft_stages, ifft, make_plan
