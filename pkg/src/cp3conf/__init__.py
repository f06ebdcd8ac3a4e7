"""Exact rational computations on the Kriz model of three-point configurations in CP^m."""
from .closed_forms import isotypic_poincare, ordered_poincare
from .cohomology import BettiTable, betti, betti_isotypic, cocycle_dims, poincare, poincare_isotypic
from .kriz_model import BasisMonomial, KrizComplex, ModelElement, diff, multiply
from .partitions import multiplicities, p3, p3_bounded
from .presentations import GradedGenerator, GradedPresentation, hilbert, newton_P
from .symmetry import IRREPS, SymmetricComplex

__version__ = "0.1.0"

__all__ = [
    "BasisMonomial", "BettiTable", "GradedGenerator", "GradedPresentation", "IRREPS",
    "KrizComplex", "ModelElement", "SymmetricComplex", "betti", "betti_isotypic",
    "cocycle_dims", "diff", "hilbert", "isotypic_poincare", "multiplicities", "multiply",
    "newton_P", "ordered_poincare", "p3", "p3_bounded", "poincare", "poincare_isotypic",
]
