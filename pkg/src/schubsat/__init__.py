"""Schubert structure constants, code and bit scaling, and checks of the
saturation property for Schubert coefficients."""
from __future__ import annotations

from .errors import (CapExceeded, InternalError, LimitError, SchubsatError,
                     SearchBudgetExceeded)
from .perm import (Permutation, code, code_inverse, descents, format_permutation,
                   from_word, length, parse_permutation, rothe)
from .polyring import Polynomial
from .satlab import SaturationReport, SaturationTriple, search, verify
from .scaling import bit_scale, bit_scale_via_seq, code_scale, seq_encode
from .schubert import coeff, monk, product_expansion, schubert_poly
from .vanishing import certify_zero, tableaux_exists

__version__ = "0.1.0"

__all__ = [
    "CapExceeded", "InternalError", "LimitError", "SchubsatError", "SearchBudgetExceeded",
    "Permutation", "code", "code_inverse", "descents", "format_permutation", "from_word",
    "length", "parse_permutation", "rothe", "Polynomial", "SaturationReport",
    "SaturationTriple", "search", "verify", "bit_scale", "bit_scale_via_seq", "code_scale",
    "seq_encode", "coeff", "monk", "product_expansion", "schubert_poly", "certify_zero",
    "tableaux_exists",
]
