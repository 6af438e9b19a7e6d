"""Tropical circuits for Schur, skew Schur and Stanley symmetric polynomials."""

__version__ = "0.1.0"
