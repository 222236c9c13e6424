"""Exact computation of degree-(k+1) pieces of secant-variety ideals of Veronese embeddings."""

__version__ = "0.1.0"
