"""Exact Hamming and symbol-pair distances of repeated-root cyclic codes over F_p."""

from .code import CyclicCode, ParityStructure, build_code, contains, encode, shift
from .gf import FieldElement, PrimeField, order, primitive_root, root_of_unity
from .poly import FactorSpec, Polynomial, expand, hasse_derivative, weight_of_x_minus_1_pow

__version__ = "0.1.0"

__all__ = [
    "CyclicCode",
    "FactorSpec",
    "FieldElement",
    "ParityStructure",
    "Polynomial",
    "PrimeField",
    "build_code",
    "contains",
    "encode",
    "expand",
    "hasse_derivative",
    "order",
    "primitive_root",
    "root_of_unity",
    "shift",
    "weight_of_x_minus_1_pow",
]
