"""Exact depth / omega computations for graded modules over weighted polynomial rings."""

__version__ = "0.1.0"
