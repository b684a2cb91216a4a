"""hkdecomp: Hilbert-Kunz functions of homogeneous ideals over prime
fields, and certified decompositions of generalized Hilbert-Kunz
functions into integer combinations of classical ones."""

__version__ = "0.1.0"

from .decompose import (Certificate, SelectionPolicy, SignedCombination,
                        StarExpression, StarStep, choose_element,
                        decompose_dim1, decompose_dim2, decompose_general,
                        default_q_list, evaluate_combination, inject_rewrite,
                        split_once, verify_identity)
from .fields import PrimeField
from .groebner import (GroebnerBasis, Ideal, buchberger, eliminate,
                       ideal_membership, normal_form, pair_budget,
                       s_polynomial)
from .hk import (HKSeries, LCReport, default_n_max, ghk_series, hk_series,
                 lc_probe, multiplicity_estimate)
from .ideals import (GradedQuotientSummary, HilbertSeries, colength,
                     colon_element, colon_ideal, elt_times_ideal,
                     frobenius_power, h0_length, hilbert_series, ideal_intersection,
                     ideal_product, ideal_sum, irrelevant_ideal, krull_dimension,
                     principal_ideal, quotient_summary, saturate_element,
                     saturate_m, unit_ideal, zero_ideal)
from .poly import Polynomial, Ring, format_polynomial, make_ring, parse_polynomial

__all__ = [
    "Certificate", "GradedQuotientSummary", "GroebnerBasis", "HKSeries",
    "HilbertSeries", "Ideal", "LCReport", "Polynomial", "PrimeField", "Ring",
    "SelectionPolicy", "SignedCombination", "StarExpression", "StarStep",
    "buchberger", "choose_element", "colength", "colon_element", "colon_ideal",
    "decompose_dim1", "decompose_dim2", "decompose_general", "default_n_max",
    "default_q_list", "eliminate", "elt_times_ideal", "evaluate_combination",
    "format_polynomial", "frobenius_power", "ghk_series", "h0_length",
    "hilbert_series", "hk_series", "ideal_intersection", "ideal_membership",
    "ideal_product", "ideal_sum", "inject_rewrite", "irrelevant_ideal",
    "krull_dimension", "lc_probe", "make_ring", "multiplicity_estimate",
    "normal_form", "pair_budget", "parse_polynomial", "principal_ideal",
    "quotient_summary", "s_polynomial", "saturate_element", "saturate_m",
    "split_once", "unit_ideal", "verify_identity", "zero_ideal",
]
