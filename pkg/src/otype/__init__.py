"""Maximal order types of well partial orders.

Exact Cantor-normal-form ordinal arithmetic, finite posets, a term algebra
over wpos (unions, lexicographic sums and products), an evaluator for the
maximal order type with an independent cut-splitting recursion, and
machine-checked witness linearizations.
"""

from .errors import (
    DomainError,
    InvalidOrderError,
    OTypeError,
    ParseError,
    ResourceLimitError,
)
from .ordinal import OMEGA, ONE, ZERO, Ordinal, compare, render, set_depth_limit
from .ordinal import parse as parse_ordinal
from .poset import (
    Cut,
    FinitePoset,
    SplitCut,
    antichain,
    chain,
    disjoint_union,
    enumerate_posets,
    lex_product,
    lex_sum,
    poset_catalog,
    split_first_maximal,
    split_maximal_layer,
)
from .terms import (
    Decomposition,
    Fin,
    Ord,
    Prod,
    Sum,
    TraceNode,
    Union,
    WpoTerm,
    decompose,
    expand_finite,
    max_count,
    max_order_type,
    parse_term,
    product_type,
    product_type_by_cuts,
    product_type_expanded,
    to_literal,
    trace_product_type,
)
from .witness import (
    Segment,
    Witness,
    WitnessReport,
    block_sum,
    extension_witness,
    lex_sum_witness,
    product_antichain_witness,
    validate_witness,
)

__all__ = [
    "OTypeError", "DomainError", "InvalidOrderError", "ParseError", "ResourceLimitError",
    "Ordinal", "ZERO", "ONE", "OMEGA", "compare", "parse_ordinal", "render", "set_depth_limit",
    "FinitePoset", "Cut", "SplitCut", "chain", "antichain", "lex_product", "disjoint_union",
    "lex_sum", "split_maximal_layer", "split_first_maximal", "enumerate_posets", "poset_catalog",
    "WpoTerm", "Fin", "Ord", "Union", "Sum", "Prod", "Decomposition", "TraceNode",
    "max_order_type", "max_count", "decompose", "product_type", "product_type_expanded",
    "product_type_by_cuts", "trace_product_type", "expand_finite", "parse_term", "to_literal",
    "Witness", "Segment", "WitnessReport", "block_sum", "product_antichain_witness",
    "lex_sum_witness", "extension_witness", "validate_witness",
]

__version__ = "0.1.0"
