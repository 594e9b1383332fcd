"""Exact arithmetic in Hol(C_n) for n = 2 p^e, the (c, j) automorphism
parametrization, and oracle-backed verification suites."""

from holomorphy._core import (
    Aut,
    CayleyGroup,
    ConsistencyError,
    Context,
    Elem,
    GeneratorError,
    NotAUnitError,
    ShapeError,
    bruteforce_automorphisms,
    center_indices,
    dihedral_table,
    factorize,
    general_holomorph_table,
    holomorph_table,
    least_primitive_root,
    lemma23_holds,
    lemma24_check,
    make_context,
    mod_pow,
    multiplicative_order,
    totient,
    verify_report,
)

__version__ = "0.1.0"

__all__ = [
    "Aut",
    "CayleyGroup",
    "ConsistencyError",
    "Context",
    "Elem",
    "GeneratorError",
    "NotAUnitError",
    "ShapeError",
    "bruteforce_automorphisms",
    "center_indices",
    "dihedral_table",
    "factorize",
    "general_holomorph_table",
    "holomorph_table",
    "least_primitive_root",
    "lemma23_holds",
    "lemma24_check",
    "make_context",
    "mod_pow",
    "multiplicative_order",
    "totient",
    "verify_report",
]
