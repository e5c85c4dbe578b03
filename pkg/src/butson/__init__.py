"""Butson Hadamard matrices, their Z_q codes, and covering radius bounds
under the homogeneous metric, with exact arithmetic throughout."""

from .bent import BentClass, BentReport, find_bent, is_bent
from .bhcode import (
    BudgetExceeded,
    Code,
    RadiusReport,
    bh_code,
    covering_radius_exact,
    covering_radius_sampled,
    first_moment,
    is_self_complementary,
    max_strength,
    row_code,
    second_moment,
    strength,
)
from .bhmatrix import BhVerification, LogMatrix, ParseError, dephase, fourier, is_bh, kronecker, sylvester
from .bounds import (
    BoundsReport,
    bent_lower_bound,
    bounds_report,
    norse_upper_bound,
    norse_upper_bound_literal,
    strength1_upper_bound,
)
from .cyclo import CycloElem, conj, cyclotomic_poly, euler_phi, is_zero, mobius, mul, norm_sq, ramanujan_sum, trace_T
from .homweight import WeightScaling, distance, lemma2_check, symbol_weight, vector_weight

__version__ = "0.1.0"
