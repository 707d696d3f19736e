"""permlcp: longest common pattern between permutations.

Exact longest-common-pattern computation guided by decomposition trees:
polynomial when one input is separable or has bounded prime-node arity,
with brute-force oracles alongside for validation.
"""

from .algebra import concat_minus, concat_plus, concat_rho
from .decomposition import (
    DecompNode,
    DecompTree,
    IntervalSpan,
    NotSeparableError,
    common_intervals,
    decomposition_tree,
    expand_tree,
    is_separable,
    max_prime_arity,
    separating_tree,
    strong_intervals,
    tree_from_nested,
    tree_to_dict,
    tree_to_dot,
    tree_to_permutation,
    tree_to_text,
)
from .lcp import DpCell, DpTable, LcpPlan, LcpResult, lcp, lcp_general, lcp_plan, lcp_separable
from .oracle import oracle_is_simple, oracle_lcp, oracle_separable
from .perms import (
    Occurrence,
    Pattern,
    Permutation,
    PermutationError,
    avoids,
    find_occurrence,
    normalize,
    parse_permutation,
)

__version__ = "0.1.0"

__all__ = [
    "Permutation",
    "Pattern",
    "Occurrence",
    "PermutationError",
    "parse_permutation",
    "normalize",
    "find_occurrence",
    "avoids",
    "concat_plus",
    "concat_minus",
    "concat_rho",
    "IntervalSpan",
    "DecompNode",
    "DecompTree",
    "NotSeparableError",
    "common_intervals",
    "strong_intervals",
    "decomposition_tree",
    "expand_tree",
    "is_separable",
    "separating_tree",
    "max_prime_arity",
    "tree_to_permutation",
    "tree_from_nested",
    "tree_to_dict",
    "tree_to_dot",
    "tree_to_text",
    "DpCell",
    "DpTable",
    "LcpResult",
    "LcpPlan",
    "lcp",
    "lcp_plan",
    "lcp_separable",
    "lcp_general",
    "oracle_lcp",
    "oracle_is_simple",
    "oracle_separable",
]
