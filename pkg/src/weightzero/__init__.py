"""Zero weight in irreducible modules of simple algebraic groups that are
tensor products of exactly two indecomposable factors."""
from .root_data import LieType
from .weights import Weight
from .criteria import (
    Decision,
    NotTwoFactor,
    TensorShape,
    classify_two_factor,
    zero_weight_two_factor,
)
from .oracle import module_dominant_weights, tensor_has_zero_weight

__all__ = [
    "LieType",
    "Weight",
    "Decision",
    "NotTwoFactor",
    "TensorShape",
    "classify_two_factor",
    "zero_weight_two_factor",
    "module_dominant_weights",
    "tensor_has_zero_weight",
]
