"""Proof and refutation terms of the two-sorted calculus for 2Int."""

from ._l2i import (
    Error,
    dual_derivation,
    dual_formula,
    dual_term,
    equal,
    gen,
    height,
    infer,
    normalize,
    parse_formula,
    parse_term,
    synonymous,
    validate,
)

__all__ = [
    "Error",
    "dual_derivation",
    "dual_formula",
    "dual_term",
    "equal",
    "gen",
    "height",
    "infer",
    "normalize",
    "parse_formula",
    "parse_term",
    "synonymous",
    "validate",
]
