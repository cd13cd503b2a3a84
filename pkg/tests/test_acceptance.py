"""Acceptance criteria 1-10, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v`` or directly as a script.
"""
from __future__ import annotations

import time

import pytest

from dihedralcovers.cubicfield import (DIAG01, ETA, conjugate_idempotent, norm_embeddings,
                                       norm_resultant, random_idempotents, solve_det_equation)
from dihedralcovers.dihedral import candidate_table, enumerate_dihedral_subgroups
from dihedralcovers.hurwitz import (BranchData, brute_force_tuple_count, burnside_count,
                                    classify_coverings, cover_space, frobenius_tuple_count,
                                    tower_report)
from dihedralcovers.perm import is_sharply_two_transitive
from dihedralcovers.report import render_json
from dihedralcovers.suites import REFERENCE_PRODUCTS, run_suite

SMALL_GRID = [(3, 4), (3, 6), (5, 4), (5, 6), (7, 4)]


def verdict(capsys, n: int, title: str, ok: bool, detail: str) -> None:
    line = f"criterion {n:>2} {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)
    assert ok, line


def test_c01_count_reproduction(capsys):
    t0 = time.perf_counter()
    c = classify_coverings(BranchData(7, 6), threads=1)
    dt = time.perf_counter() - t0
    ok = (c.class_count == 400 and c.orbit_size_histogram == {42: 400}
          and c.connected_tuples == 16800 == 7 ** 5 - 7 and dt < 5)
    verdict(capsys, 1, "count reproduction", ok,
            f"classes={c.class_count} histogram={c.orbit_size_histogram} "
            f"tuples={c.connected_tuples} time={dt:.2f}s")


def test_c02_triple_path(capsys):
    bd = BranchData(7, 6)
    direct = classify_coverings(bd).class_count
    burnside = burnside_count(bd)
    formula = (7 ** 5 - 7) // 42
    frob, brute = frobenius_tuple_count(7, 6), brute_force_tuple_count(7, 6)
    ok = direct == burnside == formula == 400 and frob == brute == 16807
    verdict(capsys, 2, "triple-path agreement", ok,
            f"direct={direct} burnside={burnside} formula={formula} "
            f"frobenius={frob} brute={brute}")


def test_c03_small_grid(capsys):
    t0 = time.perf_counter()
    bad = []
    for p, b in SMALL_GRID:
        bd = BranchData(p, b)
        if classify_coverings(bd).class_count != burnside_count(bd):
            bad.append(f"orbits({p},{b})")
        if frobenius_tuple_count(p, b) != brute_force_tuple_count(p, b):
            bad.append(f"totals({p},{b})")
    dt = time.perf_counter() - t0
    verdict(capsys, 3, "small-prime grid", not bad and dt < 30,
            f"mismatches={bad or 'none'} time={dt:.2f}s")


def test_c04_dihedral_table(capsys):
    rows = candidate_table(7)
    products = tuple(r.s.compact() for r in rows)
    flags = {r.index for r in rows if r.dihedral}
    ok = len(rows) == 12 and products == REFERENCE_PRODUCTS and flags == {1, 2, 4, 5, 8, 9, 11, 12}
    verdict(capsys, 4, "dihedral table", ok,
            f"rows={len(rows)} products_match={products == REFERENCE_PRODUCTS} "
            f"dihedral={sorted(flags)}")


def test_c05_conjugacy(capsys):
    t0 = time.perf_counter()
    enum = enumerate_dihedral_subgroups(7)
    rep = enum.representative.group
    witnessed = sum(rep.conjugate(g) == d.group for d, g in zip(enum.subgroups, enum.witnesses))
    N = cover_space(7).normalizer
    sharp = is_sharply_two_transitive(N)
    dt = time.perf_counter() - t0
    ok = enum.count == 120 == witnessed and N.order == 42 and sharp and dt < 10
    verdict(capsys, 5, "conjugacy", ok,
            f"subgroups={enum.count} witnessed={witnessed} |N|={N.order} "
            f"sharply_2_transitive={sharp} time={dt:.2f}s")


def test_c06_genus_tower(capsys):
    t0 = time.perf_counter()
    c = classify_coverings(BranchData(7, 6))
    good = 0
    for t in c.representative_tuples():
        tr = tower_report(t, c.class_count)
        f = tr.fiber
        good += (all(q.genus == 3 for q in tr.quotients) and tr.base_curve.genus == 2
                 and tr.galois_closure.genus == 8 and f.report.connected and f.galois
                 and f.group_tag == "dihedral" and f.report.group_order == 14
                 and f.etale_over_base and f.report.genus == 8)
    dt = time.perf_counter() - t0
    verdict(capsys, 6, "genus tower", good == 400 and dt < 60,
            f"representatives_ok={good}/400 time={dt:.2f}s")


def test_c07_consistency(capsys):
    c = classify_coverings(BranchData(7, 6))
    tr = tower_report(c.representative_tuples()[0], c.class_count)
    torsion = (7 ** 4 - 1) // 6
    ok = torsion == tr.torsion_count == 400 and c.class_count == 400 and tr.inferred_d == 1
    verdict(capsys, 7, "consistency chain", ok,
            f"torsion={tr.torsion_count} N={c.class_count} d={tr.inferred_d}")


def test_c08_field(capsys):
    x = 4 - ETA * ETA
    nr, ne = norm_resultant(x), norm_embeddings(x)
    sols = solve_det_equation(1)
    ints = solve_det_equation(0, integer_only=True)
    ok = nr == ne == 7 and len(sols) > 0 and ints == []
    verdict(capsys, 8, "field arithmetic", ok,
            f"norm_resultant={nr} norm_embeddings={ne} "
            f"solutions(H=1)={[str(s) for s in sols]} integer(H=0)={ints}")


def test_c09_idempotents(capsys):
    t0 = time.perf_counter()
    eps = random_idempotents(seed=1, count=100, height=3)
    ok_count = 0
    for e in eps:
        r = conjugate_idempotent(e)
        ok_count += (r.verified and r.g * e * r.g.inverse() == DIAG01
                     and r.basis_det.is_unit() and r.g.det().is_unit())
    dt = time.perf_counter() - t0
    verdict(capsys, 9, "idempotent lemma", ok_count == 100 and dt < 30,
            f"verified={ok_count}/100 time={dt:.2f}s")


def test_c10_determinism(capsys):
    one = render_json(run_suite("all", threads=1))
    eight = render_json(run_suite("all", threads=8))
    c1 = classify_coverings(BranchData(7, 6), threads=1)
    c8 = classify_coverings(BranchData(7, 6), threads=8)
    same = c1.representatives == c8.representatives and c1.orbit_sizes == c8.orbit_sizes
    verdict(capsys, 10, "determinism", one == eight and same,
            f"report_bytes={len(one)} identical={one == eight} classification_identical={same}")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_c"):
            try:
                fn(None)
            except AssertionError:
                failed += 1
    raise SystemExit(1 if failed else 0)
