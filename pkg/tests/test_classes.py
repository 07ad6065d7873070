from __future__ import annotations

from itertools import permutations as iter_permutations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from patclass.classes import (AV123, AV132, AvoidanceBasis,
                              _enum_generic, class_pattern_totals, class_size,
                              enumerate_avoiders,
                              enumerate_indecomposable_avoiders,
                              is_decomposable, prefix_contains,
                              skew_components, skew_sum)
from patclass.perms import count_occurrences, parse_perm
from patclass.series import catalan


class TestBasis:
    def test_antichain_normalization(self):
        # 1234 contains 123 and is discarded
        basis = AvoidanceBasis.of("123", "1234")
        assert basis.patterns == frozenset({(1, 2, 3)})

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            AvoidanceBasis(frozenset())


class TestEnumeration:
    def test_av3_123(self):
        got = list(enumerate_avoiders(3, AV123))
        assert got == [(1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)]

    def test_n0_yields_empty_permutation(self):
        assert list(enumerate_avoiders(0, AV123)) == [()]
        assert list(enumerate_avoiders(0, AvoidanceBasis.of("2413"))) == [()]

    def test_stream_length_is_catalan(self):
        assert sum(1 for _ in enumerate_avoiders(10, AV123)) == 16796

    def test_lexicographic_order(self):
        for basis in (AV123, AV132):
            for n in range(7):
                stream = list(enumerate_avoiders(n, basis))
                assert stream == sorted(stream)

    def test_fast_paths_agree_with_generic(self):
        for basis in (AV123, AV132):
            for n in range(8):
                fast = list(enumerate_avoiders(n, basis))
                generic = list(_enum_generic(n, basis.patterns, None)) \
                    if n else [()]
                assert fast == generic

    def test_agrees_with_containment_filter(self):
        # the naive full-recheck oracle
        for basis in (AV123, AV132, AvoidanceBasis.of("2413", "3142")):
            for n in range(7):
                expected = [
                    p for p in iter_permutations(range(1, n + 1))
                    if not any(prefix_contains(p, q) for q in basis.patterns)]
                assert list(enumerate_avoiders(n, basis)) == expected

    def test_sharding_by_first_entry(self):
        for basis in (AV123, AV132):
            shards = [list(enumerate_avoiders(6, basis, first=v))
                      for v in range(1, 7)]
            merged = sorted(p for shard in shards for p in shard)
            assert merged == list(enumerate_avoiders(6, basis))


class TestClassSize:
    @pytest.mark.parametrize("basis", [AV123, AV132])
    def test_catalan_sizes(self, basis):
        for n in range(10):
            assert class_size(n, basis) == catalan(n)

    def test_non_catalan_basis(self):
        assert class_size(4, AvoidanceBasis.of("2413")) == 23
        assert class_size(5, AvoidanceBasis.of("123")) == 42
        assert class_size(5, AvoidanceBasis.of("132")) == 42


class TestPatternTotals:
    def test_av123_n5_row(self):
        t = class_pattern_totals(5, AV123, 3)
        assert {q: t[q] for q in t.counts} == {
            (1, 2, 3): 0, (1, 3, 2): 57, (2, 1, 3): 57,
            (2, 3, 1): 81, (3, 1, 2): 81, (3, 2, 1): 144}

    def test_av132_n6_row(self):
        t = class_pattern_totals(6, AV132, 3)
        assert t[(1, 2, 3)] == 392
        assert t[(1, 3, 2)] == 0
        assert t[(2, 1, 3)] == t[(2, 3, 1)] == t[(3, 1, 2)] == 500
        assert t[(3, 2, 1)] == 748

    def test_av123_n3_pairs(self):
        t = class_pattern_totals(3, AV123, 2)
        assert t[(1, 2)] == 6 and t[(2, 1)] == 9

    def test_total_is_binomial_times_size(self):
        for n, k in ((6, 2), (6, 3), (6, 4), (7, 3)):
            t = class_pattern_totals(n, AV123, k)
            assert t.total() == comb(n, k) * catalan(n)

    def test_sharded_totals_identical(self):
        for jobs in (2, 3):
            t1 = class_pattern_totals(7, AV123, 3)
            tj = class_pattern_totals(7, AV123, 3, jobs=jobs)
            assert t1.counts == tj.counts

    def test_symmetry_inside_av123(self):
        for n in range(3, 9):
            t = class_pattern_totals(n, AV123, 3)
            assert t[(1, 3, 2)] == t[(2, 1, 3)]
            assert t[(2, 3, 1)] == t[(3, 1, 2)]

    def test_linear_relations_at_desk_scale(self):
        for n in range(3, 9):
            t = class_pattern_totals(n, AV123, 3)
            pairs = class_pattern_totals(n, AV123, 2)
            assert 2 * t[(1, 3, 2)] + 2 * t[(2, 3, 1)] + t[(3, 2, 1)] \
                == comb(n, 3) * catalan(n)
            assert 4 * t[(1, 3, 2)] + 2 * t[(2, 3, 1)] \
                == (n - 2) * pairs[(1, 2)]


class TestDecomposability:
    @pytest.mark.parametrize("text,expected", [
        ("4213", True), ("2413", False), ("1", False),
        ("21", True), ("12", False), ("4321", True),
    ])
    def test_examples(self, text, expected):
        assert is_decomposable(parse_perm(text)) is expected

    def test_components(self):
        assert skew_components(parse_perm("4321")) == [(1,)] * 4
        assert skew_components(parse_perm("4213")) == [(1,), (2, 1, 3)]
        assert skew_components(parse_perm("2413")) == [(2, 4, 1, 3)]

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            is_decomposable(())
        with pytest.raises(ValueError):
            skew_components(())

    def test_indecomposable_av123(self):
        assert set(enumerate_indecomposable_avoiders(4, AV123)) == {
            (1, 4, 3, 2), (2, 1, 4, 3), (2, 4, 1, 3),
            (3, 1, 4, 2), (3, 2, 1, 4)}
        assert list(enumerate_indecomposable_avoiders(2, AV123)) == [(1, 2)]
        assert list(enumerate_indecomposable_avoiders(1, AV123)) == [(1,)]

    def test_indecomposable_count_is_shifted_catalan(self):
        for n in range(1, 10):
            count = sum(1 for _ in enumerate_indecomposable_avoiders(n, AV123))
            assert count == catalan(n - 1)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 9).flatmap(
    lambda n: st.permutations(list(range(1, n + 1))).map(tuple)))
def test_skew_components_roundtrip(p):
    comps = skew_components(p)
    assert skew_sum(comps) == p
    for q in comps:
        assert not is_decomposable(q)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 7), st.sampled_from(["123", "132", "321", "2413"]))
def test_enumerated_permutations_avoid_basis(n, pattern):
    basis = AvoidanceBasis.of(pattern)
    q = parse_perm(pattern)
    for p in enumerate_avoiders(n, basis):
        assert count_occurrences(p, q) == 0
