"""Class groups of real quadratic fields and the norm map from the cyclotomic field."""

from src.quadratic.class_group import (
    ClassGroupSummary,
    FormClass,
    QuadraticFieldError,
    class_group,
    class_order,
    is_principal,
    split_prime_class,
)
from src.quadratic.characters import InconclusiveNormError, norm_exponent, t_sum

__all__ = [
    "ClassGroupSummary",
    "FormClass",
    "InconclusiveNormError",
    "QuadraticFieldError",
    "class_group",
    "class_order",
    "is_principal",
    "norm_exponent",
    "split_prime_class",
    "t_sum",
]
