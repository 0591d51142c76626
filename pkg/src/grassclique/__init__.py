"""Stars and tops of the graph of projective linear codes."""

from .gf import Elem, FieldSpec, fq_add, fq_inv, fq_mul, get_field
from .grassmann import GrassmannParams, gaussian_binomial
from .matfq import MatFq, Subspace, rowspace

__version__ = "0.1.0"

__all__ = [
    "Elem",
    "FieldSpec",
    "GrassmannParams",
    "MatFq",
    "Subspace",
    "fq_add",
    "fq_inv",
    "fq_mul",
    "gaussian_binomial",
    "get_field",
    "rowspace",
]
