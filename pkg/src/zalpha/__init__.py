"""Exact digit systems over rings Z[alpha].

Classifies an algebraic number by the moduli of its conjugates, builds a
digit set with one representative per (coset, orthant) pair, expands ring
elements into finite digit strings by the height-reducing iteration, and
verifies every representation with exact arithmetic.
"""

from .corering import (
    FieldElem,
    IntPoly,
    MinPoly,
    alpha_multiple_witness,
    div_by_alpha,
    in_alpha_zalpha,
    module_depth,
    to_field,
)
from .digitset import (
    Digit,
    DigitSet,
    Orthant,
    all_orthants,
    build_digit_set,
    coset_representatives,
    find_digit,
)
from .errors import (
    BoundaryUndecidable,
    BudgetExhausted,
    DivisibilityError,
    GuardExceeded,
    InputError,
    PrecisionExhausted,
    SearchExhausted,
    ZalphaError,
)
from .expander import (
    Attractor,
    ExpansionTrace,
    Expander,
    Representation,
    Status,
    attractor,
    expand,
    represent,
    search_integer_digits,
    select_digit,
    step,
)
from .places import (
    AlgebraicNumber,
    Classification,
    EmbeddingPoint,
    Kind,
    analyze,
    classify,
    embed,
    place_abs,
)
from .verify import (
    AuditReport,
    CoverageReport,
    NumberSystemReport,
    audit_trace,
    coeff_box,
    coverage,
    enumerate_words,
    integer_range,
    number_system_check,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraicNumber",
    "Attractor",
    "AuditReport",
    "BoundaryUndecidable",
    "BudgetExhausted",
    "Classification",
    "CoverageReport",
    "Digit",
    "DigitSet",
    "DivisibilityError",
    "EmbeddingPoint",
    "ExpansionTrace",
    "Expander",
    "FieldElem",
    "GuardExceeded",
    "InputError",
    "IntPoly",
    "Kind",
    "MinPoly",
    "NumberSystemReport",
    "Orthant",
    "PrecisionExhausted",
    "Representation",
    "SearchExhausted",
    "Status",
    "ZalphaError",
    "all_orthants",
    "alpha_multiple_witness",
    "analyze",
    "attractor",
    "audit_trace",
    "build_digit_set",
    "classify",
    "coeff_box",
    "coset_representatives",
    "coverage",
    "div_by_alpha",
    "embed",
    "enumerate_words",
    "expand",
    "find_digit",
    "in_alpha_zalpha",
    "integer_range",
    "module_depth",
    "number_system_check",
    "place_abs",
    "represent",
    "search_integer_digits",
    "select_digit",
    "step",
    "to_field",
]
