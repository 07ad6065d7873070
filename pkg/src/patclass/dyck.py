"""Staircase bijection from indecomposable 123-avoiders to Dyck paths.

An indecomposable 123-avoider splits into its left-to-right minima (red) and
right-to-left maxima (blue).  Walking the staircase determined by the blue
points and rotating by a quarter turn gives a Dyck path of semilength n-1;
each blue point becomes a peak whose height is the number of red points below
and to its left.  That statistic carries the 213-occurrence count: each blue
point with sp red points below-left sits in C(sp, 2) occurrences of 213.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator

from .perms import Perm, count_occurrences
from .series import catalan

P123: Perm = (1, 2, 3)


class Contains123Error(ValueError):
    """Input permutation contains a 123 occurrence."""


class DecomposableError(ValueError):
    """Input permutation is skew-decomposable."""


@dataclass(frozen=True)
class DyckPath:
    """Balanced U/D step sequence staying weakly above its start level."""

    steps: str

    def __post_init__(self) -> None:
        height = 0
        for s in self.steps:
            if s == "U":
                height += 1
            elif s == "D":
                height -= 1
            else:
                raise ValueError(f"invalid step {s!r}")
            if height < 0:
                raise ValueError(f"path dips below start: {self.steps}")
        if height != 0:
            raise ValueError(f"path does not return to start: {self.steps}")

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    def __str__(self) -> str:
        return self.steps


def enumerate_dyck_paths(semilength: int) -> Iterator[DyckPath]:
    """All Dyck paths of the given semilength."""
    def rec(prefix: list[str], ups: int, height: int) -> Iterator[str]:
        if len(prefix) == 2 * semilength:
            yield "".join(prefix)
            return
        if ups < semilength:
            prefix.append("U")
            yield from rec(prefix, ups + 1, height + 1)
            prefix.pop()
        if height > 0:
            prefix.append("D")
            yield from rec(prefix, ups, height - 1)
            prefix.pop()

    for steps in rec([], 0, 0):
        yield DyckPath(steps)


@dataclass(frozen=True)
class GridDecomposition:
    """Red/blue split of an indecomposable 123-avoider, 1-based coordinates."""

    red: tuple[tuple[int, int], ...]   # left-to-right minima, (position, value)
    blue: tuple[tuple[int, int], ...]  # right-to-left maxima, (position, value)
    sp: tuple[int, ...]                # per blue entry: #red strictly below-left


def grid_decompose(p: Perm) -> GridDecomposition:
    from .classes import is_decomposable

    if not p:
        raise ValueError("length must be >= 1")
    if count_occurrences(p, P123) > 0:
        raise Contains123Error(f"{p} contains 123")
    if is_decomposable(p):
        raise DecomposableError(f"{p} is decomposable")
    n = len(p)
    if n == 1:
        return GridDecomposition(red=((1, 1),), blue=(), sp=())

    red: list[tuple[int, int]] = []
    blue: list[tuple[int, int]] = []
    running_min = n + 1
    suffix_max = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_max[i] = max(suffix_max[i + 1], p[i])
    for i, v in enumerate(p, start=1):
        if v < running_min:
            running_min = v
            red.append((i, v))
        elif v > suffix_max[i]:
            blue.append((i, v))
        else:
            raise AssertionError(f"entry {v} of {p} is neither red nor blue")
    sp = tuple(sum(1 for (ri, rv) in red if ri < bi and rv < bv)
               for (bi, bv) in blue)
    return GridDecomposition(red=tuple(red), blue=tuple(blue), sp=sp)


def occ213_via_sp(g: GridDecomposition) -> int:
    """213 count of the source permutation, read off the sp statistic."""
    return sum(comb(s, 2) for s in g.sp)


def phi(p: Perm) -> DyckPath:
    """Map an indecomposable 123-avoider of length n to a Dyck path of semilength n-1.

    The staircase walk starts at (1, n), runs east to each blue point and
    south to the level of the next one; east runs rotate to U, south runs
    to D.
    """
    g = grid_decompose(p)
    n = len(p)
    steps: list[str] = []
    prev_x = 1
    for i, (bx, by) in enumerate(g.blue):
        next_y = g.blue[i + 1][1] if i + 1 < len(g.blue) else 1
        steps.append("U" * (bx - prev_x))
        steps.append("D" * (by - next_y))
        prev_x = bx
    return DyckPath("".join(steps))


def phi_inverse(path: DyckPath) -> Perm:
    """The unique indecomposable 123-avoider mapping to `path` under phi.

    Maximal U/D runs give the blue positions and values; the remaining cells
    are filled with the red values in decreasing order.
    """
    n = path.semilength + 1
    runs: list[tuple[str, int]] = []
    for s in path.steps:
        if runs and runs[-1][0] == s:
            runs[-1] = (s, runs[-1][1] + 1)
        else:
            runs.append((s, 1))
    out = [0] * n
    x, y = 1, n
    for (kind, length) in runs:
        if kind == "U":
            x += length
        else:
            out[x - 1] = y
            y -= length
    used = {v for v in out if v}
    free_values = sorted(set(range(1, n + 1)) - used, reverse=True)
    it = iter(free_values)
    for i in range(n):
        if out[i] == 0:
            out[i] = next(it)
    return tuple(out)


def peak_heights(path: DyckPath) -> tuple[int, ...]:
    """Heights of the UD factors, in path order."""
    heights: list[int] = []
    h = 0
    prev = ""
    for s in path.steps:
        if s == "U":
            h += 1
        else:
            if prev == "U":
                heights.append(h)
            h -= 1
        prev = s
    return tuple(heights)


@dataclass(frozen=True)
class PeakTable:
    """h[n][k] = number of peaks of height k over all Dyck paths of semilength n."""

    n_max: int
    h: tuple[tuple[int, ...], ...]  # h[n][k], 0 <= k <= n_max

    def __getitem__(self, nk: tuple[int, int]) -> int:
        n, k = nk
        if not (0 <= n <= self.n_max):
            raise IndexError(f"n={n} outside 0..{self.n_max}")
        if k < 0:
            raise IndexError("k must be >= 0")
        return self.h[n][k] if k <= self.n_max else 0


def peak_table(n_max: int) -> PeakTable:
    """Build the peak-height table by first-return decomposition.

    A nonempty path is U Q D R: a peak of height k-1 in Q, or the bare UD
    when Q is empty, yields one of height k, while peaks of R keep their
    height.  Convolving with the Catalan counts of the complementary factor
    gives an O(n_max^3) big-integer recurrence.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    cat = [catalan(i) for i in range(n_max + 1)]
    h = [[0] * (n_max + 1) for _ in range(n_max + 1)]
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            total = 0
            for i in range(n):
                c = cat[n - 1 - i]
                lifted = h[i][k - 1] + (1 if (i == 0 and k == 1) else 0)
                total += (lifted + h[i][k]) * c
            h[n][k] = total
    return PeakTable(n_max, tuple(tuple(row) for row in h))


def weighted_peak_sum(n: int, table: PeakTable | None = None) -> int:
    """Total 213 count over indecomposable 123-avoiders of length n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return 0
    if table is None or table.n_max < n - 1:
        table = peak_table(n - 1)
    return sum(comb(k, 2) * table[n - 1, k] for k in range(1, n))
