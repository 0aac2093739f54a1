"""Implicit completeness in three-valued logic: the 54 implicitly precomplete classes and the criteria built on them."""

from .core import (
    Function,
    LogicError,
    Permutation,
    System,
    compose,
    constant,
    dual_transform,
    evaluate,
    minor,
    parse_literal,
    projection,
    substitute_constant,
    superpose,
)
from .classes import CLASS_IDS, binary_fragment, duality_orbit, member, unary_fragment, violation
from .closure import closure_fragment, enumerate_unary_monoids, is_in_fragment
from .criterion import check_implicit_completeness, check_weak_completeness, validate_verdict
from .verify import bounded_implicit_oracle, extract_unary_witness, run_paper_suite

__all__ = [
    "CLASS_IDS",
    "binary_fragment",
    "bounded_implicit_oracle",
    "check_implicit_completeness",
    "check_weak_completeness",
    "closure_fragment",
    "duality_orbit",
    "enumerate_unary_monoids",
    "extract_unary_witness",
    "is_in_fragment",
    "member",
    "run_paper_suite",
    "unary_fragment",
    "validate_verdict",
    "violation",
    "Function",
    "LogicError",
    "Permutation",
    "System",
    "compose",
    "constant",
    "dual_transform",
    "evaluate",
    "minor",
    "parse_literal",
    "projection",
    "substitute_constant",
    "superpose",
]
