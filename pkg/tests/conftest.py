"""Session-wide caches for the expensive class enumerations.

The large brute-force scans (Av_11, Av_12) are needed by several acceptance
criteria; this cache guarantees each class is enumerated at most once per
test session.
"""
from __future__ import annotations

from math import comb

import pytest

from patclass.classes import (AV123, AV132, enumerate_avoiders,
                              enumerate_indecomposable_avoiders,
                              is_decomposable)
from patclass.perms import count_all_length3, count_inversions

S3_COLUMNS = ((1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2),
              (3, 2, 1))


class BruteCache:
    def __init__(self) -> None:
        self._scan: dict[tuple[str, int], dict] = {}
        self._star: dict[int, dict] = {}

    def scan(self, family: str, n: int) -> dict:
        """size, f12, f21 and all length-3 totals of Av_n(family)."""
        key = (family, n)
        if key not in self._scan:
            basis = AV123 if family == "av123" else AV132
            totals3 = {q: 0 for q in S3_COLUMNS}
            f21 = size = 0
            for p in enumerate_avoiders(n, basis):
                size += 1
                f21 += count_inversions(p)
                if n >= 3:
                    for q, c in count_all_length3(p).counts.items():
                        totals3[q] += c
            self._scan[key] = {"size": size, "f21": f21,
                               "f12": comb(n, 2) * size - f21,
                               "totals3": totals3}
        return self._scan[key]

    def star(self, n: int) -> dict:
        """members and length-3 totals of Av*_n(123)."""
        if n not in self._star:
            totals3 = {q: 0 for q in S3_COLUMNS}
            members = []
            for p in enumerate_indecomposable_avoiders(n, AV123):
                members.append(p)
                if n >= 3:
                    for q, c in count_all_length3(p).counts.items():
                        totals3[q] += c
            self._star[n] = {"members": members, "totals3": totals3}
        return self._star[n]

    def av12_sizes(self) -> tuple[int, int]:
        """(|Av_12(123)|, |Av*_12(123)|) in a single enumeration pass."""
        if "av12" not in self.__dict__:
            size = star = 0
            for p in enumerate_avoiders(12, AV123):
                size += 1
                if not is_decomposable(p):
                    star += 1
            self.av12 = (size, star)
        return self.av12


@pytest.fixture(scope="session")
def brute() -> BruteCache:
    return BruteCache()
