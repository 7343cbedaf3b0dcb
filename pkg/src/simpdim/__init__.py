"""Exact average simplex cardinality, inductive dimension and Barycentric limits."""

__version__ = "0.1.0"
