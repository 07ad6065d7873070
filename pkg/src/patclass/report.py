"""Cross-route verification suite and report machinery.

Every identity, table, and formula is checked by at least two independent
routes (brute-force enumeration, the staircase bijection, exact series).
Checks whose printed source displays are known to disagree with the data get
the status "paper-discrepancy": they must fail as printed AND pass in the
corrected form, and anything else is reported as a plain failure.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterator

from . import classes, dyck, series
from .classes import AV123, AV132
from .perms import (Perm, count_all_length3, count_inversions,
                    count_pattern_table, parse_perm)
from .series import (A132, ASTAR213, B231, BONA231_132, CATALAN, D321, F12,
                     F21, INDEC, catalan, closed_form, named_series,
                     sqrt_fraction)

PASS = "pass"
FAIL = "fail"
DISCREPANCY = "paper-discrepancy"

# Transcribed table values; columns f123, f132, f213, f231, f312, f321.
AV123_TABLE = {
    3: (0, 1, 1, 1, 1, 1),
    4: (0, 9, 9, 11, 11, 16),
    5: (0, 57, 57, 81, 81, 144),
    6: (0, 312, 312, 500, 500, 1016),
    7: (0, 1578, 1578, 2794, 2794, 6271),
}
AV132_TABLE = {
    3: (1, 0, 1, 1, 1, 1),
    4: (10, 0, 11, 11, 11, 13),
    5: (68, 0, 81, 81, 81, 109),
    6: (392, 0, 500, 500, 500, 748),
    7: (2063, 0, 2794, 2794, 2794, 4570),
}
# Vendored reference values for the 213-in-Av* sequence (A000531), n = 3..7.
ASTAR_REFERENCE = (1, 7, 38, 187, 874)

S3_COLUMNS: tuple[Perm, ...] = ((1, 2, 3), (1, 3, 2), (2, 1, 3),
                                (2, 3, 1), (3, 1, 2), (3, 2, 1))

FIGURE_PERM = parse_perm("4762513")
FIGURE_PATH = "UDUDUUDDUUDD"


@dataclass
class CheckResult:
    id: str
    params: str
    status: str
    witness: str
    ms: int


@dataclass
class VerificationReport:
    checks: list[CheckResult]

    @property
    def summary(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, DISCREPANCY: 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    @property
    def exit_code(self) -> int:
        return 1 if self.summary[FAIL] else 0

    def to_json(self) -> str:
        payload = {
            "checks": [{"id": c.id, "params": c.params, "status": c.status,
                        "witness": c.witness, "ms": c.ms}
                       for c in self.checks],
            "summary": self.summary,
        }
        return json.dumps(payload, indent=2)

    def lines(self) -> Iterator[str]:
        for c in self.checks:
            yield f"{c.status.upper():<18} {c.id}  [{c.params}]  {c.witness}"
        s = self.summary
        yield (f"summary: {s[PASS]} pass, {s[FAIL]} fail, "
               f"{s[DISCREPANCY]} paper-discrepancy")


class BruteData:
    """Cached single-pass aggregates over the enumerated classes."""

    def __init__(self, n_max: int, jobs: int = 1):
        self.n_max = n_max
        self.jobs = jobs
        self._scan: dict[tuple[str, int], dict] = {}
        self._star: dict[int, dict] = {}

    def scan(self, family: str, n: int) -> dict:
        key = (family, n)
        if key not in self._scan:
            basis = AV123 if family == "av123" else AV132
            totals3 = {q: 0 for q in S3_COLUMNS}
            f12 = f21 = size = 0
            for p in classes.enumerate_avoiders(n, basis):
                size += 1
                inv = count_inversions(p)
                f21 += inv
                f12 += comb(n, 2) - inv
                for q, c in count_all_length3(p).counts.items():
                    totals3[q] += c
            self._scan[key] = {"totals3": totals3, "f12": f12,
                               "f21": f21, "size": size}
        return self._scan[key]

    def star(self, n: int) -> dict:
        if n not in self._star:
            totals3 = {q: 0 for q in S3_COLUMNS}
            f21 = size = 0
            members = []
            for p in classes.enumerate_indecomposable_avoiders(n, AV123):
                size += 1
                members.append(p)
                f21 += count_inversions(p)
                for q, c in count_all_length3(p).counts.items():
                    totals3[q] += c
            self._star[n] = {"totals3": totals3, "f21": f21, "size": size,
                             "members": members}
        return self._star[n]

    def star132_213(self, n: int) -> int:
        total = 0
        for p in classes.enumerate_indecomposable_avoiders(n, AV132):
            total += count_all_length3(p)[(2, 1, 3)]
        return total


def build_table(family: str, n_max: int, jobs: int = 1) -> list[tuple[int, ...]]:
    """Rows (n, f123, f132, f213, f231, f312, f321) for n = 3..n_max.

    Up to n = 12 every column is brute-forced; beyond that only av123 is
    supported, through the exact closed forms.
    """
    if family not in ("av123", "av132"):
        raise ValueError(f"unknown family {family!r}")
    if n_max < 3:
        raise ValueError("n_max must be >= 3")
    if n_max > 12 and family == "av132":
        raise ValueError("av132 columns have no closed forms; n_max <= 12")
    rows = []
    if n_max > 12:
        for n in range(3, n_max + 1):
            a, b, d = (closed_form(A132, n), closed_form(B231, n),
                       closed_form(D321, n))
            rows.append((n, 0, a, a, b, b, d))
        return rows
    basis = AV123 if family == "av123" else AV132
    for n in range(3, n_max + 1):
        t = classes.class_pattern_totals(n, basis, 3, jobs=jobs)
        rows.append((n,) + tuple(t[q] for q in S3_COLUMNS))
    return rows


def _check(result: bool, ok: str, bad: str) -> tuple[str, str]:
    return (PASS, ok) if result else (FAIL, bad)


def _discrepancy(fails_as_printed: bool, passes_corrected: bool,
                 witness: str) -> tuple[str, str]:
    if fails_as_printed and passes_corrected:
        return DISCREPANCY, witness
    return FAIL, (f"expected fail-as-printed/pass-as-corrected, got "
                  f"printed_fails={fails_as_printed} "
                  f"corrected_passes={passes_corrected}")


def run_verification(n_max_brute: int = 10, series_order: int = 100,
                     jobs: int = 1,
                     inject_failure: bool = False) -> VerificationReport:
    """Run the full cross-route suite and return the ordered report."""
    if n_max_brute > 12:
        raise ValueError("n_max_brute must be <= 12")
    nb = n_max_brute
    order = series_order
    data = BruteData(nb, jobs)
    results: list[CheckResult] = []

    def run(check_id: str, params: str,
            fn: Callable[[], tuple[str, str]]) -> None:
        start = time.perf_counter()
        try:
            status, witness = fn()
        except Exception as exc:  # a crashed check is a failed check
            status, witness = FAIL, f"exception: {exc!r}"
        ms = int((time.perf_counter() - start) * 1000)
        results.append(CheckResult(check_id, params, status, witness, ms))

    # -- tables ------------------------------------------------------------
    def table_check(family: str, reference: dict[int, tuple[int, ...]]):
        def fn():
            for n, expected in reference.items():
                scan = data.scan(family, n)
                got = tuple(scan["totals3"][q] for q in S3_COLUMNS)
                if got != expected:
                    return FAIL, f"n={n}: got {got}, table says {expected}"
            return PASS, f"all {6 * len(reference)} table values reproduced"
        return fn

    run("table.av123", "n=3..7", table_check("av123", AV123_TABLE))
    run("table.av132", "n=3..7", table_check("av132", AV132_TABLE))

    # -- class sizes and symmetries ---------------------------------------
    def sizes():
        for n in range(nb + 1):
            cn = catalan(n)
            for family in ("av123", "av132"):
                size = (data.scan(family, n)["size"] if n >= 3
                        else classes.class_size(n, AV123 if family == "av123"
                                                else AV132))
                if size != cn:
                    return FAIL, f"|Av_{n}({family})| = {size} != c_{n} = {cn}"
        return PASS, f"both class sizes equal c_n for n <= {nb}"
    run("class.size.catalan", f"n<=={nb}", sizes)

    def star_count():
        for n in range(1, nb + 1):
            size = data.star(n)["size"] if n >= 3 else \
                sum(1 for _ in classes.enumerate_indecomposable_avoiders(n, AV123))
            if size != catalan(n - 1):
                return FAIL, f"|Av*_{n}(123)| = {size} != c_{n-1}"
        return PASS, f"|Av*_n(123)| = c_(n-1) for n <= {nb}"
    run("class.indecomposable.count", f"n<={nb}", star_count)

    def symmetry():
        for n in range(3, nb + 1):
            t = data.scan("av123", n)["totals3"]
            if t[(1, 3, 2)] != t[(2, 1, 3)] or t[(2, 3, 1)] != t[(3, 1, 2)]:
                return FAIL, f"n={n}: {t}"
        return PASS, "f_132 = f_213 and f_231 = f_312 in Av_n(123)"
    run("symmetry.av123", f"n=3..{nb}", symmetry)

    def components_roundtrip():
        for n in range(1, min(nb, 10) + 1):
            for p in classes.enumerate_avoiders(n, AV123):
                comps = classes.skew_components(p)
                if any(classes.is_decomposable(q) for q in comps if len(q) > 1):
                    return FAIL, f"non-indecomposable component of {p}"
                if classes.skew_sum(comps) != p:
                    return FAIL, f"reassembly failed for {p}"
        return PASS, "components indecomposable, skew sum reassembles"
    run("class.skew.roundtrip", f"n<={min(nb, 10)}", components_roundtrip)

    # -- linear relations --------------------------------------------------
    def relation1():
        for n in range(3, nb + 1):
            t = data.scan("av123", n)["totals3"]
            lhs = 2 * t[(1, 3, 2)] + 2 * t[(2, 3, 1)] + t[(3, 2, 1)]
            if lhs != comb(n, 3) * catalan(n):
                return FAIL, f"n={n}: {lhs} != C(n,3) c_n"
        return PASS, "2a + 2b + d = C(n,3) c_n (brute force)"
    run("identity.relation1", f"n=3..{nb}", relation1)

    def relation2():
        for n in range(3, nb + 1):
            scan = data.scan("av123", n)
            t = scan["totals3"]
            lhs = 4 * t[(1, 3, 2)] + 2 * t[(2, 3, 1)]
            if lhs != (n - 2) * scan["f12"]:
                return FAIL, f"n={n}: {lhs} != (n-2) f12"
        return PASS, "4a + 2b = (n-2) f_12 (brute force)"
    run("identity.relation2", f"n=3..{nb}", relation2)

    def linsys_corrected():
        a = named_series(A132, order)
        b = named_series(B231, order)
        d = named_series(D321, order)
        f12 = named_series(F12, order)
        for n in range(order + 1):
            if 2 * a[n] + 2 * b[n] + d[n] != comb(n, 3) * catalan(n):
                return FAIL, f"first relation fails at n={n}"
            if 4 * a[n] + 2 * b[n] != (n - 2) * f12[n]:
                return FAIL, f"second relation fails at n={n}"
        return PASS, f"both relations hold to order {order}"
    run("linsys.corrected", f"order={order}", linsys_corrected)

    def linsys_printed():
        # printed RHS omits the (n-2) factor; only n=3 agrees.
        a = named_series(A132, 8)
        b = named_series(B231, 8)
        fails_at_4 = (4 * a[4] + 2 * b[4]) != series.printed_linsys_rhs(4)
        corrected = (4 * a[4] + 2 * b[4]) == 2 * series.printed_linsys_rhs(4)
        return _discrepancy(fails_at_4, corrected,
                            "printed RHS 4^(n-1)-C(2n-1,n) fails at n=4; "
                            "(n-2)-corrected RHS passes")
    run("linsys.printed", "n=4", linsys_printed)

    # -- bijection ---------------------------------------------------------
    def figure1():
        return _check(str(dyck.phi(FIGURE_PERM)) == FIGURE_PATH,
                      f"phi(4762513) = {FIGURE_PATH}",
                      f"phi(4762513) = {dyck.phi(FIGURE_PERM)}")
    run("bijection.figure1", "p=4762513", figure1)

    def bijection_suite():
        for n in range(1, nb + 1):
            members = (data.star(n)["members"] if n >= 3 else
                       list(classes.enumerate_indecomposable_avoiders(n, AV123)))
            seen = set()
            for p in members:
                g = dyck.grid_decompose(p)
                path = dyck.phi(p)
                if path.semilength != n - 1:
                    return FAIL, f"phi({p}) has semilength {path.semilength}"
                if dyck.phi_inverse(path) != p:
                    return FAIL, f"roundtrip failed for {p}"
                if sorted(dyck.peak_heights(path)) != sorted(g.sp):
                    return FAIL, f"peak heights != sp for {p}"
                naive = count_all_length3(p)[(2, 1, 3)] if n >= 3 else 0
                if dyck.occ213_via_sp(g) != naive:
                    return FAIL, f"sp-route 213 count wrong for {p}"
                seen.add(path.steps)
            if len(seen) != catalan(n - 1):
                return FAIL, f"n={n}: {len(seen)} distinct paths != c_{n-1}"
        return PASS, f"bijective with statistic transport for n <= {nb}"
    run("bijection.roundtrip", f"n<={nb}", bijection_suite)

    # -- peak table --------------------------------------------------------
    def peak_census():
        limit = min(nb, 12)
        table = dyck.peak_table(limit)
        for n in range(1, limit + 1):
            census = [0] * (n + 1)
            total_peaks = 0
            for path in dyck.enumerate_dyck_paths(n):
                for h in dyck.peak_heights(path):
                    census[h] += 1
                    total_peaks += 1
            for k in range(1, n + 1):
                if table[n, k] != census[k]:
                    return FAIL, f"h[{n}][{k}] = {table[n, k]} != {census[k]}"
            if table[n, n] != 1:
                return FAIL, f"h[{n}][{n}] != 1"
            if sum(table[n, k] for k in range(1, n + 1)) != total_peaks:
                return FAIL, f"row {n} sum != brute peak count"
        return PASS, f"peak table matches brute census for n <= {limit}"
    run("peaks.table.census", f"n<={min(nb, 12)}", peak_census)

    def weighted_sum_routes():
        table = dyck.peak_table(max(nb, 7))
        gf = named_series(ASTAR213, max(nb, 7))
        for i, n in enumerate(range(3, 8)):
            if dyck.weighted_peak_sum(n, table) != ASTAR_REFERENCE[i]:
                return FAIL, f"peak route differs from A000531 at n={n}"
        for n in range(1, nb + 1):
            via_peaks = dyck.weighted_peak_sum(n, table)
            brute = (data.star(n)["totals3"][(2, 1, 3)] if n >= 3 else 0)
            if via_peaks != brute or via_peaks != gf[n]:
                return FAIL, (f"n={n}: peaks={via_peaks} brute={brute} "
                              f"gf={gf[n]}")
        return PASS, "peak table, GF, and brute force agree"
    run("peaks.weighted.sum", f"n<={nb}", weighted_sum_routes)

    # -- series vs brute force and closed forms ----------------------------
    def series_vs_brute():
        named = {F12: named_series(F12, nb), F21: named_series(F21, nb),
                 A132: named_series(A132, nb), B231: named_series(B231, nb),
                 D321: named_series(D321, nb),
                 BONA231_132: named_series(BONA231_132, nb)}
        col = {A132: (1, 3, 2), B231: (2, 3, 1), D321: (3, 2, 1)}
        for n in range(2, nb + 1):
            scan = data.scan("av123", n)
            if named[F12][n] != scan["f12"] or named[F21][n] != scan["f21"]:
                return FAIL, f"f12/f21 series differ from brute at n={n}"
            if n >= 3:
                for name, q in col.items():
                    if named[name][n] != scan["totals3"][q]:
                        return FAIL, f"{name} series differs at n={n}"
                got132 = data.scan("av132", n)["totals3"][(2, 3, 1)]
                if named[BONA231_132][n] != got132:
                    return FAIL, f"bona231_132 series differs at n={n}"
        return PASS, f"all named series match brute totals for n <= {nb}"
    run("series.vs.brute", f"n<={nb}", series_vs_brute)

    def closed_vs_series():
        for name in (F12, F21, A132, B231, D321, CATALAN, INDEC):
            s = named_series(name, order)
            start = {F12: 2, F21: 2, A132: 3, B231: 3, D321: 3,
                     CATALAN: 0, INDEC: 1}[name]
            for n in range(start, order + 1):
                if s[n] != closed_form(name, n):
                    return FAIL, f"{name}: series != closed form at n={n}"
        return PASS, f"closed forms match series to order {order}"
    run("series.closed.match", f"order={order}", closed_vs_series)

    def gf_identities():
        c = series.catalan_series(order)
        one = series.RationalSeries.from_ints([1], order)
        x = series.RationalSeries.from_ints([0, 1], order)
        if (x * c * c + one).coeffs != c.coeffs:
            return FAIL, "C != xC^2 + 1"
        inv = (one - x * c).reciprocal()
        if (c * c).coeffs != (c * inv).coeffs or \
                (c * c).coeffs != (inv * inv).coeffs:
            return FAIL, "C^2 identities fail"
        if ((c - one) * c.reciprocal()).coeffs != (x * c).coeffs:
            return FAIL, "(C-1)/C != xC"
        a = named_series(A132, order)
        astar = named_series(ASTAR213, order)
        if a.coeffs != (astar * c * c).coeffs:
            return FAIL, "A != A* C^2"
        return PASS, "Catalan GF identities and A = A* C^2 hold"
    run("series.gf.identities", f"order={order}", gf_identities)

    # -- cross-class bridge ------------------------------------------------
    def bridge_brute():
        for n in range(3, nb + 1):
            lhs = data.scan("av123", n)["totals3"][(2, 3, 1)]
            rhs = data.scan("av132", n)["totals3"][(2, 3, 1)]
            if lhs != rhs:
                return FAIL, f"n={n}: {lhs} != {rhs}"
        return PASS, "f_231(Av_n(123)) = f_231(Av_n(132)) by brute force"
    run("bridge.brute", f"n=3..{nb}", bridge_brute)

    def bridge_series():
        b = named_series(B231, order)
        bona = named_series(BONA231_132, order)
        return _check(b.coeffs == bona.coeffs,
                      f"b231 and bona231_132 series identical to order {order}",
                      "series differ")
    run("bridge.series", f"order={order}", bridge_series)

    # -- the four cross-statistic identities -------------------------------
    def identity_one():
        # Printed with Av_n(123) on the left; the data matches Av*_n(123).
        printed_fails = corrected_ok = True
        for n in range(2, nb + 1):
            star = data.star(n) if n >= 3 else None
            f21_star = star["f21"] if star else \
                sum(count_inversions(p) for p in
                    classes.enumerate_indecomposable_avoiders(n, AV123))
            astar = star["totals3"][(2, 1, 3)] if star else 0
            f21_full = data.scan("av123", n)["f21"] if n >= 3 else 1
            if f21_full == 2 * astar and n > 2:
                printed_fails = False
            if f21_star != 2 * astar:
                corrected_ok = False
        return _discrepancy(printed_fails, corrected_ok,
                            "f_21 = 2 f_213(Av*) holds over Av*, "
                            "not over the printed Av")
    run("identity.cor.one", f"n<={nb}", identity_one)

    def identity_two():
        # Printed with index n-1 on the right; search offsets n-1, n, n+1.
        holding = {-1: True, 0: True, 1: True}
        for n in range(3, nb):
            t = data.scan("av123", n)["totals3"]
            lhs = t[(2, 1, 3)] + t[(2, 3, 1)]
            for off in holding:
                m = n + off
                rhs = (data.star(m)["totals3"][(2, 3, 1)]
                       if m >= 3 else 0)
                if lhs != rhs:
                    holding[off] = False
        winners = [off for off, ok in holding.items() if ok]
        if winners == [1]:
            return DISCREPANCY, ("printed offset n-1 fails; the identity "
                                 "holds with Av*_(n+1) on the right")
        return FAIL, f"offset search found {winners}, expected [1]"
    run("identity.cor.two", f"n=3..{nb - 1}", identity_two)

    def identity_three():
        c = series.catalan_series(order)
        a = named_series(A132, order)
        j = named_series(F12, order)
        x = series.RationalSeries.from_ints([0, 1], order)
        lhs = c * a
        rhs = x * c.differentiate() * j
        common = min(lhs.order, rhs.order)
        return _check(all(lhs[n] == rhs[n] for n in range(common + 1)),
                      f"C(x) A(x) = x C'(x) J(x) to order {common}",
                      "series identity fails")
    run("identity.cor.three", f"order={order}", identity_three)

    def identity_four():
        for n in range(1, nb + 1):
            lhs = data.star132_213(n)
            star = data.star(n)["totals3"] if n >= 3 else None
            rhs = (star[(1, 3, 2)] + star[(2, 3, 1)]) if star else 0
            if lhs != rhs:
                return FAIL, f"n={n}: {lhs} != {rhs}"
        return PASS, "f_213(Av*(132)) = f_132(Av*(123)) + f_231(Av*(123))"
    run("identity.cor.four", f"n<={nb}", identity_four)

    # -- printed display discrepancies ------------------------------------
    def display_d321():
        printed = series.printed_d321_display(4)
        anchored = named_series(D321, 4)
        return _discrepancy(printed[3] != anchored[3],
                            anchored[3] == 1,
                            f"printed display gives {printed[3]} at n=3, "
                            "table value is 1; relation-derived D passes")
    run("display.d321.printed", "n=3", display_d321)

    def display_b231():
        stmt = series.printed_b231_statement(4)
        proof = series.printed_b231_proof(4)
        anchored = named_series(B231, 4)
        fails = any(stmt[n] != anchored[n] for n in range(5)) and \
            any(proof[n] != anchored[n] for n in range(5))
        return _discrepancy(fails, anchored[3] == 1 and anchored[4] == 11,
                            "both printed partial-fraction displays fail "
                            "at n<=4; table-anchored B passes")
    run("display.b231.printed", "n<=4", display_b231)

    def display_bona():
        printed = series.printed_bona_gf(4)
        anchored = named_series(BONA231_132, 4)
        return _discrepancy(printed[3] != anchored[3],
                            anchored[3] == 1,
                            f"printed GF gives {printed[3]} at x^3 against "
                            "table value 1; x-normalized form passes")
    run("display.bona.printed", "n=3", display_bona)

    def display_partial_fractions():
        astar_pf = series.printed_astar_partial_fractions(order)
        a_pf = series.printed_a132_partial_fractions(order)
        ok = (astar_pf.coeffs == named_series(ASTAR213, order).coeffs
              and a_pf.coeffs == named_series(A132, order).coeffs)
        return _check(ok, "A* and A partial-fraction displays match",
                      "partial-fraction display differs")
    run("display.partialfractions", f"order={order}", display_partial_fractions)

    # -- dominance of the decreasing pattern -------------------------------
    def dominance():
        for n in range(8, nb + 1):
            totals = {q: 0 for q in count_pattern_table((1, 2, 3, 4), 4).counts}
            for p in classes.enumerate_avoiders(n, AV123):
                for q, c in count_pattern_table(p, 4).counts.items():
                    totals[q] += c
            top = totals[(4, 3, 2, 1)]
            for q, c in totals.items():
                if q != (4, 3, 2, 1) and c >= top:
                    return FAIL, f"n={n}: f_{q} = {c} >= f_4321 = {top}"
        return PASS, f"4321 strictly dominates S_4 patterns for n = 8..{nb}"
    run("dominance.s4", f"n=8..{nb}", dominance)

    # -- asymptotics -------------------------------------------------------
    def asymptotics():
        n1 = order
        n0 = max(10, order // 3)
        printed_off = True
        corrected_ok = True
        witness_parts = []
        # corrected leading constants from the table-anchored GFs:
        # a ~ (1/4) sqrt(n/pi) 4^n, b ~ (n/8) 4^n, d ~ (1/6) sqrt(n^3/pi) 4^n
        for name, corrected in ((A132, Fraction(1, 4)),
                                (B231, Fraction(1, 4)),
                                (D321, Fraction(1, 16))):
            s = named_series(name, n1)
            r_printed = [s[n] / series.asymptotic_estimate(name, n)
                         for n in (n0, n1)]
            r_corr = [r / corrected for r in r_printed]
            if abs(r_printed[1] - 1) < Fraction(1, 2):
                printed_off = False
            band = 4 / sqrt_fraction(Fraction(n1))
            if abs(r_corr[1] - 1) > band or \
                    abs(r_corr[1] - 1) >= abs(r_corr[0] - 1):
                corrected_ok = False
            witness_parts.append(f"{name}: {float(r_corr[1]):.3f}")
        return _discrepancy(printed_off, corrected_ok,
                            "printed constants off by 4 (a,b) and 16 (d); "
                            "corrected ratios at n=%d: %s"
                            % (n1, ", ".join(witness_parts)))
    run("asymptotics.ratio", f"order={order}", asymptotics)

    if inject_failure:
        run("selftest.corrupted-series", "fixture",
            lambda: (FAIL, "deliberately corrupted fixture"))

    results.sort(key=lambda c: c.id)
    return VerificationReport(results)
