"""Exact computer algebra for operations that split associativity.

The package provides free algebras on tree and word bases for six
operation families (dendriform, tridendriform, 2-associative, Zinbiel,
associative, magmatic), the connected Hopf structure each one carries
(coproduct, antipode, filtration, primitives, convolution), decision
procedures for binary quadratic regular presentations with unit actions
(compatibility, star associativity, coherence of the mixed tensor rule),
and exact truncated power series for the dimension bookkeeping.
"""

from .acceptance import CriterionResult, run_all
from .exactlin import (
    FreeModuleElement,
    RationalMatrix,
    as_fraction,
    kernel_basis,
    rank,
    row_reduce,
    same_span,
    span_contains,
)
from .freealg import (
    Element,
    Family,
    UndefinedProductError,
    enumerate_basis,
    format_element,
    generator,
    key_content,
    key_degree,
    operations,
    parse_element,
    product,
    star_name,
)
from .hopf import (
    Endomorphism,
    TensorElement,
    antipode,
    coassociativity_check,
    convolution,
    coproduct,
    counit,
    expand_leg,
    filtration_degree,
    format_tensor,
    is_primitive,
    primitive_basis,
    reduced_coproduct,
    tensor_of,
    tensor_product_mixed,
)
from .presentations import (
    BUILTIN_NAMES,
    CheckReport,
    Presentation,
    PresentationError,
    Witness,
    builtin_presentation,
    check_coherence,
    check_compatibility,
    compatible_space,
    format_presentation,
    parse_presentation,
    star_is_associative,
    substitution_matrix,
)
from .series import (
    PowerSeries,
    RationalFunction,
    SeriesParseError,
    alternating_integer_check,
    comp_inverse,
    compose,
    dimension_sequence,
    expand_rational,
    named_series,
    parse_rational_function,
    signed_dimension_series,
)
from .trees import ParseError, format_tree, parse_tree

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_NAMES",
    "CheckReport",
    "CriterionResult",
    "Element",
    "Endomorphism",
    "Family",
    "FreeModuleElement",
    "ParseError",
    "PowerSeries",
    "Presentation",
    "PresentationError",
    "RationalFunction",
    "RationalMatrix",
    "SeriesParseError",
    "TensorElement",
    "UndefinedProductError",
    "Witness",
    "alternating_integer_check",
    "antipode",
    "as_fraction",
    "builtin_presentation",
    "check_coherence",
    "check_compatibility",
    "coassociativity_check",
    "comp_inverse",
    "compatible_space",
    "compose",
    "convolution",
    "coproduct",
    "counit",
    "dimension_sequence",
    "enumerate_basis",
    "expand_leg",
    "expand_rational",
    "filtration_degree",
    "format_element",
    "format_presentation",
    "format_tensor",
    "format_tree",
    "generator",
    "is_primitive",
    "kernel_basis",
    "key_content",
    "key_degree",
    "named_series",
    "operations",
    "parse_element",
    "parse_presentation",
    "parse_rational_function",
    "parse_tree",
    "primitive_basis",
    "product",
    "rank",
    "reduced_coproduct",
    "row_reduce",
    "run_all",
    "same_span",
    "signed_dimension_series",
    "span_contains",
    "star_is_associative",
    "star_name",
    "substitution_matrix",
    "tensor_of",
    "tensor_product_mixed",
]
