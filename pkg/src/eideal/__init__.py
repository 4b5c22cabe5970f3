"""Exact invariants and Euclidean ideal class certificates for real biquadratic fields."""

from eideal.kernels import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
