"""Monogenicity and Galois groups of quartic trinomials x^4 + a x^3 + d."""

from .exactint import Factorization, factorize, is_squarefree
from .galois import GaloisGroup, galois_group
from .monogenic import jks_check, monogenic_oracle
from .quartic import Trinomial, delta, disc, is_irreducible
from .theorems import Classification, a4_family, classify

__all__ = [
    "Classification",
    "Factorization",
    "GaloisGroup",
    "Trinomial",
    "a4_family",
    "classify",
    "delta",
    "disc",
    "factorize",
    "galois_group",
    "is_irreducible",
    "is_squarefree",
    "jks_check",
    "monogenic_oracle",
]
