"""Brute-force reference implementations.

These exist to validate the main modules, so they deliberately re-derive
everything from the definitions instead of sharing code with them: the
simplicity check rescans every span with builtin min/max, and the
separability check tests the two forbidden length-4 patterns by explicit
comparison.  All of them are exponential or naive on purpose.
"""

from __future__ import annotations

from itertools import combinations

from .perms import Pattern, Permutation, find_occurrence, normalize

# Enumerating index subsets is exponential; past this size the sweep is no
# longer a reasonable test fixture.
MAX_ORACLE_SIZE = 12


def oracle_lcp(sigma: Permutation, tau: Permutation) -> Pattern:
    """Longest common pattern by exhaustion, guaranteed maximal length.

    Enumerates index subsets of the smaller input in decreasing size
    (lexicographic within a size) and returns the first normalized
    subsequence that occurs in the other input.
    """
    small, big = (sigma, tau) if len(sigma) <= len(tau) else (tau, sigma)
    if len(small) > MAX_ORACLE_SIZE:
        raise ValueError(
            f"oracle_lcp guard: smaller input has size {len(small)} > {MAX_ORACLE_SIZE}"
        )
    vals = small.values
    for size in range(len(vals), 0, -1):
        for idxs in combinations(range(len(vals)), size):
            pat = normalize(tuple(vals[i] for i in idxs))
            if find_occurrence(big, pat) is not None:
                return pat
    return Pattern(())


def oracle_is_simple(sigma: Permutation) -> bool:
    """True iff sigma has no common interval besides singletons and itself.

    Sizes 1-3 are excluded: size-2 blocks are treated as linear, and no
    size-3 permutation is interval-free anyway.
    """
    vals = sigma.values
    n = len(vals)
    if n < 4:
        return False
    for lo in range(n):
        for hi in range(lo + 1, n):
            if lo == 0 and hi == n - 1:
                continue
            window = vals[lo : hi + 1]
            if max(window) - min(window) == hi - lo:
                return False
    return True


def oracle_separable(sigma: Permutation) -> bool:
    """Avoidance-based separability test, independent of the decomposition code."""
    vals = sigma.values
    for p1, p2, p3, p4 in combinations(range(len(vals)), 4):
        v1, v2, v3, v4 = vals[p1], vals[p2], vals[p3], vals[p4]
        if v2 < v4 < v1 < v3:  # an occurrence of 3 1 4 2
            return False
        if v3 < v1 < v4 < v2:  # an occurrence of 2 4 1 3
            return False
    return True
