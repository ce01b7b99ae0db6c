"""Weighted A-infinity algebras A and B, the weighted diagonal, and the bimodules relating them."""
from .algebra_a import AlgebraA
from .algebra_b import AlgebraB
from .bimodules import BimoduleX, BimoduleY, BoxTensor, TensorAB
from .diagonal import Diagonal, build_diagonal, verify_diagonal
from .ring import Caps, Params

__all__ = ["AlgebraA", "AlgebraB", "BimoduleX", "BimoduleY", "BoxTensor", "Caps", "Diagonal",
           "Params", "TensorAB", "build_diagonal", "verify_diagonal"]
