"""Exact Baker-Campbell-Hausdorff series terms.

The order-n term of z = log(e^x e^y) falls out of a finite computation:
build two (n+1) x (n+1) unit-triangular matrices, one per letter, multiply
them, take the upper-right entry of the exact matrix logarithm, and read
the resulting multilinear polynomial back as words.  The same machinery
covers products of more exponentials and of arbitrary power series with
f(0) = 1, a numeric +-1 evaluation of the same entry, and a commutator
form of the result.  All arithmetic is over arbitrary-precision rationals.
"""

__version__ = "0.1.0"

from .multilinear import MultilinearPoly, Rational, SupportOverlapError
from .trimatrix import (
    SeriesSpec,
    TriMatrix,
    build_factor_matrix,
    log_upper_right,
    mat_mul,
    word_matrix_product,
)
from .words import Alphabet, NCSeries, Word
from .series import bch_term, bch_term_multi, logf_term, t_operator
from .dynkin import LieTerm, dynkin_substitute, expand_commutators
from .signedeval import (
    ScanReport,
    SignedCoefficientTable,
    build_table,
    eval_assignment,
    reconstruct_term,
    scan_nonvanishing,
)
from .freealgebra import TruncatedNCSeries, nc_exp, nc_log, nc_mul, oracle_bch
from .output import OutputDocument

__all__ = [
    "__version__",
    "Alphabet",
    "LieTerm",
    "MultilinearPoly",
    "NCSeries",
    "OutputDocument",
    "Rational",
    "ScanReport",
    "SeriesSpec",
    "SignedCoefficientTable",
    "SupportOverlapError",
    "TriMatrix",
    "TruncatedNCSeries",
    "Word",
    "bch_term",
    "bch_term_multi",
    "build_factor_matrix",
    "build_table",
    "dynkin_substitute",
    "eval_assignment",
    "expand_commutators",
    "log_upper_right",
    "logf_term",
    "mat_mul",
    "nc_exp",
    "nc_log",
    "nc_mul",
    "oracle_bch",
    "reconstruct_term",
    "scan_nonvanishing",
    "t_operator",
    "word_matrix_product",
]
