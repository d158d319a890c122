"""Exact computation of cyclotomic Euler-Mahonian polynomials and
verification of the identities they satisfy."""

from .bijection import pair_to_word, word_to_pair
from .cyclotomic import CycElem, cyclotomic_poly, specialize_p
from .identities import SUITES, VerificationReport, run_matrix
from .permstat import euler_mahonian
from .polyring import QPoly, TriPoly, TruncSeries, hadamard

__all__ = [
    "CycElem", "QPoly", "SUITES", "TriPoly", "TruncSeries", "VerificationReport",
    "cyclotomic_poly", "euler_mahonian", "hadamard", "pair_to_word", "run_matrix",
    "specialize_p", "word_to_pair",
]
