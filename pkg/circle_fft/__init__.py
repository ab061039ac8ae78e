"""Radix-2 FFT with a naive DFT oracle, exact operation counting and unit-circle diagrams."""

__version__ = "0.1.0"
