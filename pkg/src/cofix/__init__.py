"""Cofixed spaces of symmetric groups acting on polynomial rings.

Exact arithmetic, transfer ideals in the elementary symmetric polynomials,
Groebner bases over prime fields, and minimal free resolutions of the
cofixed module over the ring of invariants.
"""

from .arith import GF, QQ, PrimeField, is_p_local, valuation_p
from .combin import (PermGroupSpec, artin_basis, dominance_leq, enumerate_partitions, is_special,
                     special_partitions, stabilizer_order, sylow_generators)
from .epoly import (EIdeal, EPolynomial, GroebnerBasis, buchberger, ideals_equal_mod_p,
                    is_regular_sequence, krull_dimension, normal_form)
from .polyx import (SymPolynomial, XPolynomial, act, expand_m_basis, subgroup_transfer,
                    to_elementary, transfer_monomial)

__version__ = "0.1.0"

__all__ = [
    "GF", "QQ", "PrimeField", "is_p_local", "valuation_p",
    "PermGroupSpec", "artin_basis", "dominance_leq", "enumerate_partitions", "is_special",
    "special_partitions", "stabilizer_order", "sylow_generators",
    "EIdeal", "EPolynomial", "GroebnerBasis", "buchberger", "ideals_equal_mod_p",
    "is_regular_sequence", "krull_dimension", "normal_form",
    "SymPolynomial", "XPolynomial", "act", "expand_m_basis", "subgroup_transfer",
    "to_elementary", "transfer_monomial",
]
