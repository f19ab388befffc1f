"""Legendre-symbol binary pseudorandom sequences: constructions,
validity conditions, exact pseudorandomness measures, and theoretical
bound comparisons."""

__version__ = "0.1.0"

from .bounds import (bound_C, bound_theorem3, bound_theoremA_C, bound_W,
                     weil_incomplete_bound)
from .conditions import (ConditionReport, check_correlation_order,
                         check_divisibility_condition,
                         check_divisibility_condition_symmetric,
                         check_squarefree_triple, check_theorem2_sets)
from .constructions import (BinarySequence, PolyTriple, build_theorem2_polys,
                            closed_form_element, construct_combined,
                            construct_single, construct_triple)
from .ff import Poly, PrimeModulus, QnrSet, is_prime, is_primitive_root, \
    legendre, parse_poly, powmod
from .measures import (BudgetExceeded, MeasureResult, correlation,
                       correlation_sampled, cross_correlation,
                       cross_correlation_sampled, oracle_correlation,
                       oracle_well_distribution, well_distribution)
