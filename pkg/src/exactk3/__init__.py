"""Exact lattice and elliptic-surface computations for an Enriques surface of minimal entropy."""

__version__ = "0.1.0"
