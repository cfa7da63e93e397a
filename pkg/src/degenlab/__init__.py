"""Exact verification of degenerations of 2-dimensional Poisson-type algebras."""

__version__ = "0.1.0"
