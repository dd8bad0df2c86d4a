"""Signature-based Gröbner bases over the rationals."""

from .coeff import Rational, rat
from .order import DEGLEX, DEGREVLEX, LEX, POT, TOP, MonomialOrder, TermOrder
from .poly import Polynomial, Ring, autoreduce, normal_form, spoly
from .sigcore import SigPoly, gb_sig, rb
from .textio import ParseError, format_poly, parse_system

__all__ = [
    "Rational", "rat", "DEGLEX", "DEGREVLEX", "LEX", "POT", "TOP", "MonomialOrder", "TermOrder",
    "Polynomial", "Ring", "autoreduce", "normal_form", "spoly", "SigPoly", "gb_sig", "rb",
    "ParseError", "format_poly", "parse_system",
]
