"""Avoidance-class enumeration and per-class pattern totals.

Enumeration is prefix backtracking in lexicographic order: a prefix that
already contains a forbidden pattern can never extend to an avoider, so the
branch is pruned.  The single-pattern bases {123} and {132} get dedicated
incremental pruning states (the hot paths for everything in this package);
any other basis goes through a generic check of occurrences ending at the
newest position.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .perms import (Perm, PatternCountTable, all_patterns, as_perm,
                    count_all_length3, count_occurrences, count_pattern_table,
                    parse_perm, standardize)

P123: Perm = (1, 2, 3)
P132: Perm = (1, 3, 2)


@dataclass(frozen=True)
class AvoidanceBasis:
    """A non-empty antichain of forbidden patterns."""

    patterns: frozenset[Perm]

    def __post_init__(self) -> None:
        if not self.patterns:
            raise ValueError("basis must be non-empty")

    @classmethod
    def of(cls, *patterns: str | Sequence[int]) -> "AvoidanceBasis":
        """Build a basis, discarding patterns that contain another one."""
        parsed = []
        for q in patterns:
            parsed.append(parse_perm(q) if isinstance(q, str) else as_perm(q))
        minimal = frozenset(
            q for q in parsed
            if not any(r != q and count_occurrences(q, r) > 0 for r in parsed))
        return cls(minimal)


AV123 = AvoidanceBasis.of("123")
AV132 = AvoidanceBasis.of("132")


def prefix_contains(prefix: Sequence[int], q: Perm) -> bool:
    """Naive full containment recheck; kept as the debug oracle for pruning."""
    k = len(q)
    if k == 0:
        return True
    return any(standardize(w) == q for w in combinations(prefix, k))


def _enum_123(n: int, first: int | None) -> Iterator[Perm]:
    # Incremental state: mn = minimum of the prefix, cap = smallest value that
    # tops an ascent.  Appending v keeps the prefix 123-free iff v < cap.
    out = [0] * n
    used = [False] * (n + 1)

    def rec(m: int, mn: int, cap: int) -> Iterator[Perm]:
        if m == n:
            yield tuple(out)
            return
        lo, hi = 1, min(cap - 1, n)
        if m == 0 and first is not None:
            lo, hi = first, min(first, hi)
        for v in range(lo, hi + 1):
            if used[v]:
                continue
            used[v] = True
            out[m] = v
            yield from rec(m + 1, min(mn, v), v if v > mn else cap)
            used[v] = False

    yield from rec(0, n + 1, n + 1)


def _enum_132(n: int, first: int | None) -> Iterator[Perm]:
    # Appending v creates a 132 iff some earlier entry a < v is followed by an
    # entry c > v.  Per node: suffix maxima are non-increasing, so the set of
    # forbidden values is recovered by one descending two-pointer sweep.
    prefix: list[int] = []
    used = [False] * (n + 1)

    def allowed() -> list[int]:
        m = len(prefix)
        suf = [0] * m  # suf[i] = max of prefix[i+1:]
        run = 0
        for i in range(m - 1, -1, -1):
            suf[i] = run
            run = max(run, prefix[i])
        pmin = [0] * m
        run = n + 1
        for i in range(m):
            run = min(run, prefix[i])
            pmin[i] = run
        vals: list[int] = []
        j = 0
        for u in range(n, 0, -1):
            while j < m and suf[j] > u:
                j += 1
            if used[u]:
                continue
            if j >= 1 and pmin[j - 1] < u:
                continue
            vals.append(u)
        vals.reverse()
        return vals

    def rec() -> Iterator[Perm]:
        m = len(prefix)
        if m == n:
            yield tuple(prefix)
            return
        for v in allowed():
            if m == 0 and first is not None and v != first:
                continue
            used[v] = True
            prefix.append(v)
            yield from rec()
            prefix.pop()
            used[v] = False

    yield from rec()


def _enum_generic(n: int, patterns: frozenset[Perm],
                  first: int | None) -> Iterator[Perm]:
    prefix: list[int] = []
    used = [False] * (n + 1)

    def creates_occurrence(v: int) -> bool:
        m = len(prefix)
        for q in patterns:
            k = len(q)
            if k == 0 or (k == 1 and q == (1,)):
                return True
            if m < k - 1:
                continue
            for idx in combinations(range(m), k - 1):
                window = tuple(prefix[i] for i in idx) + (v,)
                if standardize(window) == q:
                    return True
        return False

    def rec() -> Iterator[Perm]:
        m = len(prefix)
        if m == n:
            yield tuple(prefix)
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            if m == 0 and first is not None and v != first:
                continue
            if creates_occurrence(v):
                continue
            used[v] = True
            prefix.append(v)
            yield from rec()
            prefix.pop()
            used[v] = False

    yield from rec()


def enumerate_avoiders(n: int, basis: AvoidanceBasis, *,
                       first: int | None = None) -> Iterator[Perm]:
    """Length-n avoiders of every basis pattern, in lexicographic order.

    `first` restricts the stream to permutations with the given first entry
    (the sharding axis for parallel aggregation).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        if first is None:
            yield ()
        return
    if basis.patterns == {P123}:
        yield from _enum_123(n, first)
    elif basis.patterns == {P132}:
        yield from _enum_132(n, first)
    else:
        yield from _enum_generic(n, basis.patterns, first)


def class_size(n: int, basis: AvoidanceBasis) -> int:
    return sum(1 for _ in enumerate_avoiders(n, basis))


def _accumulate_totals(perms: Iterable[Perm], k: int) -> dict[Perm, int]:
    totals = {q: 0 for q in all_patterns(k)}
    if k == 3:
        for p in perms:
            for q, c in count_all_length3(p).counts.items():
                totals[q] += c
    else:
        for p in perms:
            for q, c in count_pattern_table(p, k).counts.items():
                totals[q] += c
    return totals


def _totals_shard(args: tuple[int, frozenset[Perm], int, int]) -> dict[Perm, int]:
    n, patterns, k, first = args
    basis = AvoidanceBasis(patterns)
    return _accumulate_totals(enumerate_avoiders(n, basis, first=first), k)


def class_pattern_totals(n: int, basis: AvoidanceBasis, k: int, *,
                         jobs: int = 1,
                         indecomposable: bool = False) -> PatternCountTable:
    """Total occurrences of every length-k pattern over Av_n(basis).

    With jobs > 1 the class is sharded by first entry and reduced with a
    commutative big-integer sum, so results are independent of shard count.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if indecomposable:
        stream = enumerate_indecomposable_avoiders(n, basis)
        return PatternCountTable(k, _accumulate_totals(stream, k))
    if jobs <= 1 or n == 0:
        stream = enumerate_avoiders(n, basis)
        return PatternCountTable(k, _accumulate_totals(stream, k))
    totals = {q: 0 for q in all_patterns(k)}
    work = [(n, basis.patterns, k, first) for first in range(1, n + 1)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for shard in pool.map(_totals_shard, work):
            for q, c in shard.items():
                totals[q] += c
    return PatternCountTable(k, totals)


def is_decomposable(p: Perm) -> bool:
    """True iff p = q (skew-sum) r with every prefix value above every suffix value."""
    if not p:
        raise ValueError("length must be >= 1")
    n = len(p)
    # scan split points from the right: min(p[:k]) > max(p[k:])
    prefix_min = [0] * (n + 1)
    running = n + 1
    for i, v in enumerate(p):
        running = min(running, v)
        prefix_min[i + 1] = running
    running = 0
    for k in range(n - 1, 0, -1):
        running = max(running, p[k])
        if prefix_min[k] > running:
            return True
    return False


def skew_components(p: Perm) -> list[Perm]:
    """Maximal decomposition into indecomposable skew-sum components.

    Each component is standardized to a permutation of its own length; the
    skew sum of the components reconstructs p.
    """
    if not p:
        raise ValueError("length must be >= 1")
    components: list[Perm] = []
    rest = p
    while rest:
        n = len(rest)
        split = n
        pref_min = n + 1
        suffix_max = [0] * (n + 1)
        for i in range(n - 1, -1, -1):
            suffix_max[i] = max(suffix_max[i + 1], rest[i])
        for k in range(1, n):
            pref_min = min(pref_min, rest[k - 1])
            if pref_min > suffix_max[k]:
                split = k
                break
        components.append(standardize(rest[:split]))
        rest = rest[split:]
    return components


def skew_sum(components: Sequence[Perm]) -> Perm:
    """Inverse of skew_components: q1 (skew-sum) q2 (skew-sum) ... qm."""
    total = sum(len(q) for q in components)
    out: list[int] = []
    above = total
    for q in components:
        out.extend(v + above - len(q) for v in q)
        above -= len(q)
    return tuple(out)


def enumerate_indecomposable_avoiders(n: int,
                                      basis: AvoidanceBasis) -> Iterator[Perm]:
    if n < 1:
        raise ValueError("n must be >= 1")
    for p in enumerate_avoiders(n, basis):
        if not is_decomposable(p):
            yield p
