"""Core permutation and pattern types, parsing, and pattern involvement.

Permutations are bijections of {1..n} written in one-line notation; patterns
are the same but may be empty (the pattern epsilon).  Everything here is
immutable and 1-based at the boundary, matching the usual combinatorics
convention.

``find_occurrence`` is the definitional backtracking search.  It is
exponential in the worst case and intended for validation, oracles and small
inputs only; the polynomial algorithms live in :mod:`permlcp.lcp`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Sequence, Union


class PermutationError(ValueError):
    """Input does not define a valid permutation, pattern or occurrence."""


def _check_one_line(values: tuple[int, ...]) -> None:
    """Check that values is a bijection of {1..n}, n = len(values)."""
    n = len(values)
    seen = [False] * (n + 1)
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool):
            raise PermutationError(f"non-integer entry {v!r}")
        if not 1 <= v <= n:
            raise PermutationError(f"value {v} out of range 1..{n}")
        if seen[v]:
            raise PermutationError(f"duplicate value {v}")
        seen[v] = True


@dataclass(frozen=True, slots=True)
class Permutation:
    """A permutation of {1..n}, n >= 1, in one-line notation.

    >>> str(Permutation((3, 1, 2)))
    '3 1 2'
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        if not self.values:
            raise PermutationError("empty input: a permutation has size >= 1")
        _check_one_line(self.values)

    @property
    def n(self) -> int:
        return len(self.values)

    def to_pattern(self) -> "Pattern":
        return Pattern(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __str__(self) -> str:
        return " ".join(map(str, self.values))


@dataclass(frozen=True, slots=True)
class Pattern:
    """A normalized permutation used as a pattern value; may be empty.

    >>> Pattern(()).length
    0
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        _check_one_line(self.values)

    @property
    def length(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __str__(self) -> str:
        return " ".join(map(str, self.values)) if self.values else "<empty>"


@dataclass(frozen=True, slots=True)
class Occurrence:
    """Strictly increasing 1-based positions into a host permutation."""

    positions: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "positions", tuple(self.positions))
        prev = 0
        for p in self.positions:
            if not isinstance(p, int) or p <= prev:
                raise PermutationError(
                    f"positions must be strictly increasing and >= 1, got {self.positions}"
                )
            prev = p

    def __len__(self) -> int:
        return len(self.positions)

    def __iter__(self) -> Iterator[int]:
        return iter(self.positions)

    def __str__(self) -> str:
        return " ".join(map(str, self.positions))


PermLike = Union[Permutation, Pattern, Sequence[int]]


def _as_values(x: PermLike) -> tuple[int, ...]:
    if isinstance(x, (Permutation, Pattern)):
        return x.values
    return tuple(x)


_TOKEN = re.compile(r"[1-9][0-9]*")
_SEP = re.compile(r"\s*,\s*|\s+")


def parse_permutation(text: str) -> Permutation:
    """Parse one-line notation: positive integers split by spaces or single commas.

    >>> parse_permutation("5, 1, 3, 2, 4").n
    5
    """
    stripped = text.strip()
    if not stripped:
        raise PermutationError("empty input")
    values = []
    for token in _SEP.split(stripped):
        if not _TOKEN.fullmatch(token):
            raise PermutationError(f"malformed token {token!r}")
        values.append(int(token))
    return Permutation(tuple(values))


def normalize(values: PermLike) -> Pattern:
    """Reduce a sequence of distinct integers to its order-isomorphic pattern.

    >>> normalize((5, 2, 9)).values
    (2, 1, 3)
    """
    vals = _as_values(values)
    order = sorted(vals)
    for x, y in zip(order, order[1:]):
        if x == y:
            raise PermutationError(f"duplicate value {x}")
    rank = {v: r + 1 for r, v in enumerate(order)}
    return Pattern(tuple(rank[v] for v in vals))


def find_occurrence(host: PermLike, pi: PermLike) -> Occurrence | None:
    """Find one occurrence of pattern ``pi`` in ``host``, or None.

    Backtracking over position choices, pruned by the value window forced by
    the already-matched prefix.  The empty pattern occurs everywhere with the
    empty position list.  Returned positions are the lexicographically least
    occurrence, which makes results reproducible.
    """
    hvals = _as_values(host)
    pvals = _as_values(pi)
    k, n = len(pvals), len(hvals)
    if k == 0:
        return Occurrence(())
    if k > n:
        return None

    chosen: list[int] = []

    def extend(t: int, start: int) -> bool:
        if t == k:
            return True
        lo, hi = 0, n + 1
        for s in range(t):
            if pvals[s] < pvals[t]:
                v = hvals[chosen[s]]
                if v > lo:
                    lo = v
            elif pvals[s] > pvals[t]:
                v = hvals[chosen[s]]
                if v < hi:
                    hi = v
        for pos in range(start, n - (k - t) + 1):
            if lo < hvals[pos] < hi:
                chosen.append(pos)
                if extend(t + 1, pos + 1):
                    return True
                chosen.pop()
        return False

    if extend(0, 0):
        return Occurrence(tuple(p + 1 for p in chosen))
    return None


def avoids(host: PermLike, pi: PermLike) -> bool:
    """True iff ``host`` contains no occurrence of ``pi``."""
    return find_occurrence(host, pi) is None
