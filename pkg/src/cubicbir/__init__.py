"""Exact W(E6)-invariant birational geometry of moduli of marked cubic surfaces."""

from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
