"""Exact computation and verification of the Jaco-Lucas triangle.

``JL(n, k)`` counts circular ternary strings of length ``n`` with exactly
``k`` 2s and no two cyclically adjacent symbols from {1, 2}. The package
builds the triangle three ways, checks its recurrences, and re-verifies that
every row is log-concave with a single mode at ``(n - 4) // 6 + 1``.
"""

from .certifier import (
    certify_all,
    cone_certificate,
    verify_keystone,
    verify_lemma22,
    verify_lemma23,
    verify_theorem24,
)
from .combinatorics import count_cyclic_strings, cross_check_oracle
from .exactnum import DomainError, QuadSurd, RatInterval, UndecidedError, surd_compare
from .report import CertReport, Status, VerificationReport
from .triangle import JLTable, build_table, jl_closed_form, mode_formula

__all__ = [
    "CertReport",
    "DomainError",
    "JLTable",
    "QuadSurd",
    "RatInterval",
    "Status",
    "UndecidedError",
    "VerificationReport",
    "build_table",
    "certify_all",
    "cone_certificate",
    "count_cyclic_strings",
    "cross_check_oracle",
    "jl_closed_form",
    "mode_formula",
    "surd_compare",
    "verify_keystone",
    "verify_lemma22",
    "verify_lemma23",
    "verify_theorem24",
]

__version__ = "0.1.0"
