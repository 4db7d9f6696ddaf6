"""Soft-assisted product decoder laboratory."""

__version__ = "0.1.0"
