"""Exact toolkit for Garding polynomials, matroid generating functions and M-matrices."""

from .polycore import Polynomial, parse_polynomial, format_polynomial

__all__ = ["Polynomial", "parse_polynomial", "format_polynomial"]
__version__ = "0.1.0"
