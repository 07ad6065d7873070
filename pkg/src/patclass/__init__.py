"""Exact pattern-occurrence totals over 123- and 132-avoiding permutations.

Three independent routes to every number: brute-force class enumeration,
the staircase bijection onto Dyck paths, and exact rational power series,
with a verification suite that cross-checks them all.
"""
from .perms import (Perm, PatternCountTable, complement, count_all_length3,
                    count_inversions, count_occurrences, count_pattern_table,
                    format_perm, inverse, parse_perm, reverse, standardize)
from .classes import (AV123, AV132, AvoidanceBasis, class_pattern_totals,
                      class_size, enumerate_avoiders,
                      enumerate_indecomposable_avoiders, is_decomposable,
                      skew_components, skew_sum)
from .dyck import (Contains123Error, DecomposableError, DyckPath,
                   GridDecomposition, PeakTable, enumerate_dyck_paths,
                   grid_decompose, occ213_via_sp, peak_heights, peak_table,
                   phi, phi_inverse, weighted_peak_sum)
from .series import (RationalSeries, asymptotic_estimate, catalan,
                     catalan_series, closed_form, named_series,
                     sqrt_pow_series)
from .report import VerificationReport, build_table, run_verification

__all__ = [name for name in dir() if not name.startswith("_")]
