"""Gosper's algorithm and Zeilberger's creative telescoping over exact rationals."""

from binomid.telescope.gosper import GosperCertificate, gosper, gosper_form
from binomid.telescope.ratfunc import RationalFunction
from binomid.telescope.terms import (
    Affine,
    BinomialProductTerm,
    Factor,
    UnsupportedTermError,
    beta_summand,
    parse_term,
    term_ratio,
)
from binomid.telescope.verify import (
    beta_inner_recurrence,
    check_recurrence_on_values,
    definite_sum,
    verify_certificate,
)
from binomid.telescope.zeilberger import Recurrence, zeilberger

__all__ = [
    "Affine",
    "BinomialProductTerm",
    "Factor",
    "GosperCertificate",
    "RationalFunction",
    "Recurrence",
    "UnsupportedTermError",
    "beta_inner_recurrence",
    "beta_summand",
    "check_recurrence_on_values",
    "definite_sum",
    "gosper",
    "gosper_form",
    "parse_term",
    "term_ratio",
    "verify_certificate",
    "zeilberger",
]
