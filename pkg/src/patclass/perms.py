"""Permutations in one-line notation: parsing, pattern counting, symmetry maps.

A permutation is stored as a tuple of the integers 1..n (1-based one-line
notation); the empty tuple is the empty permutation.  Patterns are themselves
permutations, and occurrence counts are over strictly increasing index
subsets.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations as _permutations
from math import comb
from typing import Sequence

Perm = tuple[int, ...]


def as_perm(values: Sequence[int]) -> Perm:
    """Validate and return `values` as a permutation of 1..n."""
    p = tuple(values)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p!r}")
    return p


def parse_perm(text: str) -> Perm:
    """Parse "4762513" (digits, n <= 9) or "10,3,1,..." (comma-separated)."""
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        return as_perm([int(tok) for tok in text.split(",")])
    return as_perm([int(ch) for ch in text])


def format_perm(p: Perm) -> str:
    if len(p) <= 9:
        return "".join(str(v) for v in p)
    return ",".join(str(v) for v in p)


def standardize(values: Sequence[int]) -> Perm:
    """Relative order of a sequence of distinct values, as a permutation.

    >>> standardize((4, 6, 2))
    (2, 3, 1)
    """
    order = sorted(range(len(values)), key=values.__getitem__)
    out = [0] * len(values)
    for rank, idx in enumerate(order, start=1):
        out[idx] = rank
    return tuple(out)


def all_patterns(k: int) -> list[Perm]:
    """All k! patterns of length k in lexicographic order."""
    return [q for q in _permutations(range(1, k + 1))]


@dataclass(frozen=True)
class PatternCountTable:
    """Occurrence counts for every pattern of a fixed length k."""

    k: int
    counts: dict[Perm, int]

    def __post_init__(self) -> None:
        expected = set(all_patterns(self.k))
        if set(self.counts) != expected:
            raise ValueError(f"counts must have exactly the {len(expected)} "
                             f"patterns of length {self.k} as keys")
        if any(v < 0 for v in self.counts.values()):
            raise ValueError("counts must be non-negative")

    def __getitem__(self, q: Perm) -> int:
        return self.counts[q]

    def total(self) -> int:
        return sum(self.counts.values())

    @classmethod
    def zeros(cls, k: int) -> "PatternCountTable":
        return cls(k, {q: 0 for q in all_patterns(k)})


def count_occurrences(p: Perm, q: Perm) -> int:
    """Number of index subsets of p order-isomorphic to q."""
    k = len(q)
    if k == 0:
        return 1
    if k > len(p):
        return 0
    if k == 1:
        return len(p)
    total = 0
    for window in combinations(p, k):
        if standardize(window) == q:
            total += 1
    return total


def count_pattern_table(p: Perm, k: int) -> PatternCountTable:
    """Census of all length-k patterns of p in a single pass over subsets."""
    if k == 0:
        raise ValueError("k must be >= 1")
    counts = {q: 0 for q in all_patterns(k)}
    if k <= len(p):
        for window in combinations(p, k):
            counts[standardize(window)] += 1
    return PatternCountTable(k, counts)


def count_all_length3(p: Perm) -> PatternCountTable:
    """All six length-3 pattern counts of p in O(n^2).

    Uses the left/right smaller/greater profile of each entry: the monotone
    patterns and the "extreme value at a fixed position" sums determine all
    six counts.  Cross-checked against count_pattern_table in the test suite.
    """
    n = len(p)
    if n < 3:
        return PatternCountTable.zeros(3)

    left_small = [0] * n
    left_great = [0] * n
    right_small = [0] * n
    right_great = [0] * n
    for j in range(n):
        pj = p[j]
        for i in range(j):
            if p[i] < pj:
                left_small[j] += 1
            else:
                left_great[j] += 1
        for i in range(j + 1, n):
            if p[i] < pj:
                right_small[j] += 1
            else:
                right_great[j] += 1

    f123 = sum(left_small[j] * right_great[j] for j in range(n))
    f321 = sum(left_great[j] * right_small[j] for j in range(n))
    # triples whose minimum sits at the first position: patterns 123, 132
    min_first = sum(comb(right_great[i], 2) for i in range(n))
    # triples whose maximum sits at the first position: patterns 312, 321
    max_first = sum(comb(right_small[i], 2) for i in range(n))
    # triples whose maximum sits at the middle position: patterns 132, 231
    max_mid = sum(left_small[j] * right_small[j] for j in range(n))

    f132 = min_first - f123
    f312 = max_first - f321
    f231 = max_mid - f132
    f213 = comb(n, 3) - f123 - f132 - f231 - f312 - f321
    return PatternCountTable(3, {
        (1, 2, 3): f123, (1, 3, 2): f132, (2, 1, 3): f213,
        (2, 3, 1): f231, (3, 1, 2): f312, (3, 2, 1): f321,
    })


def count_inversions(p: Perm) -> int:
    """Number of 21 patterns (inversions)."""
    return sum(1 for i, j in combinations(range(len(p)), 2) if p[i] > p[j])


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v - 1] = i + 1
    return tuple(out)


def reverse(p: Perm) -> Perm:
    return p[::-1]


def complement(p: Perm) -> Perm:
    n = len(p)
    return tuple(n + 1 - v for v in p)
