"""Finite verification kernel for enriched categories, pasting diagrams and iconic tricategories."""

__version__ = "0.1.0"
