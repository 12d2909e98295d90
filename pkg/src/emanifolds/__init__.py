"""Invariants of 8-dimensional spin E-manifolds: realizability, framed links, Lie ranks."""

__version__ = "0.1.0"
