"""Exact arithmetic toolkit for genus-2 Shimura curves and their Atkin-Lehner quotients.

Everything here is computed over exact rationals (``fractions.Fraction``);
no floating point is used anywhere in the package.
"""

__version__ = "0.1.0"
