from __future__ import annotations

import random
from itertools import permutations as iter_permutations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from patclass.perms import (PatternCountTable, all_patterns, as_perm,
                            complement, count_all_length3, count_inversions,
                            count_occurrences, count_pattern_table,
                            format_perm, inverse, parse_perm, reverse,
                            standardize)


def perm_strategy(max_n: int = 12):
    return st.integers(0, max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(tuple))


class TestParseFormat:
    def test_digit_string(self):
        assert parse_perm("4762513") == (4, 7, 6, 2, 5, 1, 3)

    def test_comma_separated(self):
        p = tuple([10, 3, 1, 2, 4, 5, 6, 7, 8, 9])
        assert parse_perm("10,3,1,2,4,5,6,7,8,9") == p
        assert format_perm(p) == "10,3,1,2,4,5,6,7,8,9"

    def test_short_format_is_digits(self):
        assert format_perm((4, 7, 6, 2, 5, 1, 3)) == "4762513"

    def test_empty(self):
        assert parse_perm("") == ()
        assert format_perm(()) == ""

    def test_rejects_non_permutation(self):
        with pytest.raises(ValueError):
            parse_perm("122")
        with pytest.raises(ValueError):
            as_perm([0, 1])


class TestCountOccurrences:
    def test_paper_example(self):
        assert count_occurrences(parse_perm("462513"), (2, 1, 3)) == 2

    def test_descending_has_no_ascent(self):
        assert count_occurrences((3, 2, 1), (1, 2, 3)) == 0

    def test_figure_permutation(self):
        # frozen from the brute-force oracle over all C(7,3) triples
        assert count_occurrences(parse_perm("4762513"), (2, 1, 3)) == 2

    def test_degenerate_patterns(self):
        assert count_occurrences((2, 1, 3), ()) == 1
        assert count_occurrences((2, 1, 3), (1,)) == 3
        assert count_occurrences((1, 2), (1, 2, 3)) == 0

    def test_self_containment(self):
        assert count_occurrences((2, 1, 3), (2, 1, 3)) == 1


class TestCountAllLength3:
    def test_descending_triple(self):
        t = count_all_length3((3, 2, 1))
        assert t[(3, 2, 1)] == 1
        assert t.total() == 1

    def test_462513_sums_to_binomial(self):
        t = count_all_length3(parse_perm("462513"))
        assert t[(2, 1, 3)] == 2
        assert t.total() == comb(6, 3)

    def test_too_short(self):
        assert count_all_length3((1, 2)).total() == 0

    def test_matches_naive_on_1000_random_perms(self):
        rng = random.Random(12345)
        for _ in range(1000):
            n = rng.randint(0, 12)
            p = list(range(1, n + 1))
            rng.shuffle(p)
            p = tuple(p)
            assert count_all_length3(p).counts == \
                count_pattern_table(p, 3).counts


class TestInversions:
    @pytest.mark.parametrize("p,expected", [
        ((3, 2, 1), 3),
        ((1, 2, 3), 0),
        # frozen from the pairwise oracle (count_occurrences with 21)
        (parse_perm("4762513"), 15),
    ])
    def test_examples(self, p, expected):
        assert count_inversions(p) == expected
        assert count_occurrences(p, (2, 1)) == expected


class TestSymmetries:
    def test_inverse_of_231(self):
        assert inverse((2, 3, 1)) == (3, 1, 2)

    def test_inverse_of_identity(self):
        assert inverse((1, 2, 3, 4, 5)) == (1, 2, 3, 4, 5)

    def test_complement_and_reverse(self):
        assert complement((1, 3, 2)) == (3, 1, 2)
        assert reverse((1, 3, 2)) == (2, 3, 1)

    def test_inverse_invariance_exhaustive(self):
        # count_occurrences(inverse(p), inverse(q)) = count_occurrences(p, q)
        patterns = all_patterns(3)
        for n in range(8):
            for p in iter_permutations(range(1, n + 1)):
                table = count_pattern_table(p, 3) if n >= 3 else None
                if table is None:
                    continue
                inv_table = count_pattern_table(inverse(p), 3)
                for q in patterns:
                    assert inv_table[inverse(q)] == table[q]


class TestPatternCountTable:
    def test_requires_all_patterns(self):
        with pytest.raises(ValueError):
            PatternCountTable(3, {(1, 2, 3): 0})

    def test_rejects_negative(self):
        counts = {q: 0 for q in all_patterns(2)}
        counts[(1, 2)] = -1
        with pytest.raises(ValueError):
            PatternCountTable(2, counts)


@settings(max_examples=60, deadline=None)
@given(perm_strategy())
def test_triple_counts_sum_to_binomial(p):
    assert count_pattern_table(p, 3).total() == comb(len(p), 3)


@settings(max_examples=60, deadline=None)
@given(perm_strategy())
def test_pairs_split_into_rises_and_inversions(p):
    n = len(p)
    assert count_occurrences(p, (1, 2)) + count_inversions(p) == comb(n, 2)


@settings(max_examples=60, deadline=None)
@given(perm_strategy())
def test_symmetry_maps_are_involutions(p):
    assert inverse(inverse(p)) == p
    assert reverse(reverse(p)) == p
    assert complement(complement(p)) == p


@settings(max_examples=60, deadline=None)
@given(perm_strategy(max_n=8))
def test_standardize_of_perm_is_identity_map(p):
    assert standardize(p) == p
