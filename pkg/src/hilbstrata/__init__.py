"""Groebner-strata decomposition of Hilbert schemes of projective space."""
from .algebra import Rational, TPolynomial, XPolynomial
from .enumeration import CornerSet, enumerate_M, expansion
from .hilbert import HilbertPolynomial, chart_counts, macaulay_decomposition, parse_hilbert_polynomial
from .orders import MonomialOrder, WeightVector, compare, realize_weight
from .report import DecompositionReport, cell_order, decompose, homology, homology_from, singular_loci, verify
from .stratum import build_family, classify, specialize, stratum_equations, tangent_dimension, torus_act

__version__ = "0.1.0"
