"""Exact Sylvester double sums for polynomials with multiple roots."""

from .double_sums import (
    DoubleSumIndex,
    SplitPoly,
    msylv,
    sylv_classical,
    sylv_general,
    sylv_nonmonic,
    symbolic_F,
    symbolic_S,
)
from .exact import ScalarMatrix, binom, det, epsilon, enumerate_subsets, subset_signature
from .hermite import HermiteData, hermite_interpolate, symmetric_basis, symmetric_coords
from .polynomials import MultiPoly, RootMultiset, UniPoly, from_roots
from .subresultants import remainder_sequence, sres_det, sres_prs

__all__ = [
    "DoubleSumIndex", "HermiteData", "MultiPoly", "RootMultiset", "ScalarMatrix",
    "SplitPoly", "UniPoly", "binom", "det", "enumerate_subsets", "epsilon", "from_roots",
    "hermite_interpolate", "msylv", "remainder_sequence", "sres_det", "sres_prs",
    "subset_signature", "sylv_classical", "sylv_general", "sylv_nonmonic",
    "symbolic_F", "symbolic_S", "symmetric_basis", "symmetric_coords",
]
