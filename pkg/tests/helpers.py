"""Shared test utilities: random generators and tiny independent oracles."""

from __future__ import annotations

import random
from itertools import combinations, permutations

from permlcp import (
    Pattern,
    Permutation,
    concat_minus,
    concat_plus,
    normalize,
    tree_from_nested,
)


def random_permutation(rng: random.Random, n: int) -> Permutation:
    return Permutation(tuple(rng.sample(range(1, n + 1), n)))


def random_separable(rng: random.Random, n: int) -> Permutation:
    """Random separable permutation built from random signed splits."""

    def build(k: int) -> Pattern:
        if k == 1:
            return Pattern((1,))
        u = rng.randint(1, k - 1)
        cat = concat_plus if rng.random() < 0.5 else concat_minus
        return cat(build(u), build(k - u))

    return Permutation(build(n).values)


def all_permutations(n: int):
    for p in permutations(range(1, n + 1)):
        yield Permutation(p)


def contains_by_enumeration(host, pattern) -> bool:
    """Ground-truth involvement: try every index subset."""
    hv = tuple(host)
    pv = tuple(pattern)
    if not pv:
        return True
    for idxs in combinations(range(len(hv)), len(pv)):
        if normalize(tuple(hv[i] for i in idxs)).values == pv:
            return True
    return False


def all_common_pattern_values(sigma, tau):
    """Every pattern (as a value tuple) common to both inputs, by exhaustion."""
    sv, tv = tuple(sigma), tuple(tau)
    found = {()}
    for size in range(1, min(len(sv), len(tv)) + 1):
        tau_patterns = {
            normalize(tuple(tv[i] for i in idxs)).values
            for idxs in combinations(range(len(tv)), size)
        }
        for idxs in combinations(range(len(sv)), size):
            pat = normalize(tuple(sv[i] for i in idxs)).values
            if pat in tau_patterns:
                found.add(pat)
    return found


def all_binary_separating_trees(values: tuple[int, ...]):
    """Yield every valid binary separating tree of the given block, as nested specs."""
    if len(values) == 1:
        yield values[0]
        return
    for split in range(1, len(values)):
        left, right = values[:split], values[split:]
        if max(left) < min(right):
            for lt in all_binary_separating_trees(left):
                for rt in all_binary_separating_trees(right):
                    yield ("+", lt, rt)
        if min(left) > max(right):
            for lt in all_binary_separating_trees(left):
                for rt in all_binary_separating_trees(right):
                    yield ("-", lt, rt)


def separating_trees_of(sigma: Permutation):
    for spec in all_binary_separating_trees(sigma.values):
        yield tree_from_nested(spec)


def assert_valid_result(sigma: Permutation, tau: Permutation, result) -> None:
    """The returned pattern must occur at the returned positions in both inputs."""
    sub_sigma = normalize(tuple(sigma.values[p - 1] for p in result.occ_sigma))
    sub_tau = normalize(tuple(tau.values[p - 1] for p in result.occ_tau))
    assert sub_sigma.values == result.pattern.values, (
        sigma.values,
        tau.values,
        result.pattern.values,
        result.occ_sigma.positions,
    )
    assert sub_tau.values == result.pattern.values, (
        sigma.values,
        tau.values,
        result.pattern.values,
        result.occ_tau.positions,
    )
