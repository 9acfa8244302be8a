"""Exact computations with connected sums of graded Artinian Gorenstein algebras."""

__version__ = "0.1.0"

from .scalars import QQ, GF, field_from_spec
from .graded_poly import Grading, Poly, contract, parse_poly, format_poly, monomials_of_degree
from .algebra import HilbertFunction, AlgebraElement, InternalConsistencyError
from .inverse_system import InverseSystem, from_text
from .connected_sum import (
    OrientedSurjection,
    AlgebraMap,
    thom_class,
    check_connected_sum,
    fibered_product_dual,
    connected_sum_dual,
    fibered_product_structural,
    connected_sum_structural,
    monomial_cs_criterion,
    probe_decomposability,
    diagonalize_quadratic,
    verify_generalized_thom,
    product_presentation_over_F,
)
from .lefschetz import (
    slp_check,
    wlp_check,
    jordan_type,
    generic_lefschetz,
    wlp_middle_check,
    blowup_cs,
    closure_add,
    two_block_classify,
)
