"""
Oracle package.

Independent structure constants from Schur and Schur P-polynomials (sympy),
used to cross-check the tableau enumerators.
"""

from .polynomials import (
    TruncatedPolynomial,
    schur_polynomial,
    p_function,
    schur_product_expansion,
    p_product_expansion,
    schur_product_coefficient,
    p_product_coefficient,
)


__all__ = [
    # Polynomials
    "TruncatedPolynomial", "schur_polynomial", "p_function",
    # Coefficients
    "schur_product_expansion", "p_product_expansion",
    "schur_product_coefficient", "p_product_coefficient",
]
