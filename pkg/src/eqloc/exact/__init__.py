"""Exact coefficient arithmetic: cyclotomics, Laurent polynomials, localized elements."""
from .cyclotomic import CycNumber, zeta
from .laurent import LaurentPoly
from .localized import BinomialFactor, LocalizedElement, ResidualDenominator, localized_sum

__all__ = [
    "BinomialFactor",
    "CycNumber",
    "LaurentPoly",
    "LocalizedElement",
    "ResidualDenominator",
    "localized_sum",
    "zeta",
]
