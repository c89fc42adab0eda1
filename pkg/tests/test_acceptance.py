"""Acceptance battery: one test and one printed PASS/FAIL line per criterion.

Run directly (python tests/test_acceptance.py) or through pytest, which prints
the same lines in its terminal summary.
"""

import io
import time
from contextlib import redirect_stdout
from pathlib import Path

from weylstrata import strata_graph as sg
from weylstrata.cli import main
from weylstrata.exceptional_tables import class_table
from weylstrata.verification import checks
from weylstrata.weyl_engine.registry import build

GOLDEN = Path(__file__).parent / "golden"
EXCEPTIONAL = [("G", 2), ("F", 4), ("E", 6), ("E", 7), ("E", 8)]
CLASSICAL_8 = (
    [("A", n) for n in range(1, 9)]
    + [("B", n) for n in range(2, 9)]
    + [("C", n) for n in range(2, 9)]
    + [("D", n) for n in range(4, 9)]
)

RESULTS: dict[int, tuple[bool, str]] = {}


def record(k: int, failures: list, note: str) -> None:
    ok = not failures
    detail = note if ok else f"{len(failures)} failure(s); first: {failures[0]}"
    RESULTS[k] = (ok, detail)
    print(summary_line(k))
    assert ok, detail


def summary_line(k: int) -> str:
    ok, detail = RESULTS[k]
    return f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}"


def _failures(reports) -> list[str]:
    return [f"{r.check} {r.group}: {r.details.get('counterexamples', [])[:1]}" for r in reports if not r.ok]


def test_criterion_01_table_reproduction():
    bad = []
    prefix = {"G2": 3, "F4": 6, "E6": 3, "E7": 6, "E8": 14}
    for t, k in prefix.items():
        start = time.perf_counter()
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = main(["tables", "--type", t])
        dt = time.perf_counter() - start
        if code != 0 or buf.getvalue().encode("utf-8") != (GOLDEN / f"table_{t}.txt").read_bytes():
            bad.append(f"{t}: output differs from the golden transcription")
        if dt >= 1.0:
            bad.append(f"{t}: {dt:.2f}s")
        got = sum(e.distinguished for e in class_table(t))
        if got != k:
            bad.append(f"{t}: {got} distinguished entries, expected {k}")
    record(1, bad, "5 tables byte-identical, prefixes 3/6/3/6/14")


def test_criterion_02_strata_consistency():
    bad = []
    start = time.perf_counter()
    for kind, n in EXCEPTIONAL + CLASSICAL_8:
        g = sg.compute_strata(kind, n)
        for s in g.strata:
            if not s.consistent:
                bad.append(f"{g.group}: {[g.names[v] for v in s.members]}")
        if {s.C_prime_E for s in g.strata} != build(kind, n).cl_classes():
            bad.append(f"{g.group}: CL members and strata differ")
    for n in range(2, 9):
        bad += [f"B{n} labels: {s.members}" for s in sg.label_strata_bc(n).strata if not s.consistent]
    for n in range(4, 9):
        bad += [f"D{n} labels: {s.members}" for s in sg.label_strata_d(n).strata if not s.consistent]
    dt = time.perf_counter() - start
    record(2, bad, f"every component has one CL member and one m-minimum ({dt:.1f}s)")


def test_criterion_03_factorization_census():
    bad = []
    for kind, n in EXCEPTIONAL + CLASSICAL_8:
        g = sg.compute_strata(kind, n)
        bad += [f"{g.group}: {v}" for v in sg.census_violations(g)]
    e8 = sg.census(sg.compute_strata("E", 8))
    record(3, bad, f"all components are directed path products; E8 census {dict(sorted(e8.items()))}")


def test_criterion_04_cl_union():
    bad = []
    groups = (
        EXCEPTIONAL
        + [("A", n) for n in range(1, 7)]
        + [("B", n) for n in range(2, 7)]
        + [("D", n) for n in range(4, 7)]
    )
    for kind, n in groups:
        r = sg.check_cl_union(build(kind, n))
        bad += [f"{r.group}: {v}" for v in r.violations]
    for n in range(1, 13):
        r = sg.check_cl_union_labels_bc(n)
        bad += [f"{r.group} labels: {v}" for v in r.violations]
    record(4, bad, "engine: A1-6, B2-6, D4-6, G2, F4, E6-8; labels: B1-12; zero violations")


def test_criterion_05_oracle_equivalence():
    start = time.perf_counter()
    reports = []
    for n in range(2, 7):
        reports += checks.check_oracle_classical("B", n)
    for n in range(4, 7):
        reports += checks.check_oracle_classical("D", n)
    reports += checks.check_oracle_exceptional("G2") + checks.check_oracle_exceptional("F4")
    dt = time.perf_counter() - start
    bad = _failures(reports)
    if dt >= 120:
        bad.append(f"runtime {dt:.0f}s")
    record(5, bad, f"{len(reports)} oracle comparisons agree ({dt:.1f}s)")


def test_criterion_06_extremal_fibers():
    reports = []
    for n in range(1, 9):
        reports += checks.check_fibers("B", n)
    for n in range(4, 9):
        reports += checks.check_fibers("D", n)
    record(6, _failures(reports), "unique m-min and m-max per fiber, rules match scans, B1-8 and D4-8")


def test_criterion_07_distinguished_is_elliptic_in_cl():
    reports = []
    for n in range(1, 9):
        reports += checks.check_distinguished_classical("B", n)
    for n in range(4, 9):
        reports += checks.check_distinguished_classical("D", n)
    for kind, n in EXCEPTIONAL:
        reports += checks.check_distinguished_engine(kind, n)
    record(7, _failures(reports), "set equality for B1-8, D4-8 and all exceptional tables")


def test_criterion_08_sequence_bijections():
    reports = []
    for n in range(1, 13):
        reports += checks.check_sequences(n)
    record(8, _failures(reports), "B1-12 and D4-12 match step-bounded sequences; ws totals equal n")


def test_criterion_09_inclusions():
    reports = []
    for n in range(1, 11):
        reports += checks.check_inclusions(n)
    record(9, _failures(reports), "all odd-characteristic and mixed outputs are characteristic-2 distinguished, n <= 10")


def test_criterion_10_minimum_length():
    reports = checks.check_min_length("G", 2) + checks.check_min_length("F", 4)
    for n in range(2, 5):
        reports += checks.check_min_length("B", n)
    record(10, _failures(reports), "min length = rank + |roots of W_s| for G2, F4, B2-B4")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
