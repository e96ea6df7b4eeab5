"""Exact equivariant K-theory localization: abelian and nonabelian fixed-point
formulas, and degree-zero Riemann-Roch for quotients by finite groups."""

__version__ = "0.1.0"
