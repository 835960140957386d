"""Exact computations with natural operations on Hochschild cochains."""

__version__ = "0.1.0"
