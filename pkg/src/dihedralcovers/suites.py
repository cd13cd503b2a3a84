"""Verification suites behind ``dihedralcovers verify``.

Each suite returns a list of checks comparing an expected value against an
independent computation. ``source`` records where the expected value comes
from: ``literature`` for published values, ``derived`` for values obtained
from an independent oracle, ``trivial`` for identities.
"""
from __future__ import annotations

import time
from typing import Callable

from .cubicfield import (ETA, MINPOLY, OMatrix2, classify_polarization_matrices,
                         conjugate_idempotent, derive_minimal_polynomial, norm_embeddings,
                         norm_resultant, random_idempotents, solve_det_equation)
from .dihedral import candidate_table, enumerate_dihedral_subgroups
from .hurwitz import (BranchData, brute_force_tuple_count, burnside_count, classify_coverings,
                      cover_space, frobenius_tuple_count, tower_report)
from .perm import parse_cycles
from .poly import discriminant, poly
from .report import Check, Report

# products a*b_i of the twelve candidate rows, as printed in the literature
REFERENCE_PRODUCTS = (
    "(1357642)", "(1367542)", "(13742)",
    "(1457632)", "(1467532)", "(14732)",
    "(15762)", "(1537462)", "(1547362)",
    "(16752)", "(1637452)", "(1647352)",
)
REFERENCE_DIHEDRAL_ROWS = (1, 2, 4, 5, 8, 9, 11, 12)
SMALL_GRID = ((3, 4), (3, 6), (5, 4), (5, 6), (7, 4))

SUITES = ("dihedral-table", "conjugacy", "count-400", "genus-tower", "field", "idempotents")


class _Recorder:
    def __init__(self, report: Report, timings: bool):
        self.report = report
        self.timings = timings
        self._t = time.perf_counter()

    def add(self, name: str, claim: str, source: str, expected, computed) -> None:
        now = time.perf_counter()
        rt = now - self._t if self.timings else None
        self._t = now
        self.report.checks.append(Check(name, claim, source, expected, computed, rt))


def suite_dihedral_table(rec: _Recorder, **_) -> None:
    rows = candidate_table(7)
    rec.report.tables.append((
        "involutions b_i fixing 1 with s_i = a*b_i, a = (12)(34)(56)",
        ["i", "b_i", "s_i", "dihedral"],
        [[str(r.index), r.b.compact(), r.s.compact(), "yes" if r.dihedral else f"no ({r.reason})"]
         for r in rows],
    ))
    rec.add("candidate_rows", "involutions fixing 1 left after excluding (27)", "literature",
            12, len(rows))
    rec.add("product_cycles", "cycle strings of a*b_i in row order", "literature",
            list(REFERENCE_PRODUCTS), [r.s.compact() for r in rows])
    rec.add("dihedral_rows", "rows where <a, b_i> is dihedral of order 14", "literature",
            list(REFERENCE_DIHEDRAL_ROWS), [r.index for r in rows if r.dihedral])
    rec.add("non_dihedral_reason", "the other rows have a*b_i of order 5", "derived",
            ["product-order-5"] * 4, [r.reason for r in rows if not r.dihedral])


def suite_conjugacy(rec: _Recorder, **_) -> None:
    enum = enumerate_dihedral_subgroups(7)
    rep = enum.representative.group
    ok = sum(1 for d, g in zip(enum.subgroups, enum.witnesses) if rep.conjugate(g) == d.group)
    rec.add("dihedral_subgroups", "order-14 dihedral subgroups of S_7 (5040/42)", "derived",
            120, enum.count)
    rec.add("conjugating_witnesses", "subgroups with a verified witness to <a, b_1>", "literature",
            enum.count, ok)
    cert = cover_space(7).normalizer_certificate()
    rec.add("normalizer_order", "normalizer of <a, b_1> in S_7 has affine-group order",
            "literature", 42, cert["order"])
    rec.add("normalizer_sharply_2_transitive", "normalizer acts sharply 2-transitively",
            "derived", True, cert["sharply_2_transitive"])
    b1, b8, g = (parse_cycles(s, 7) for s in ("(23)(45)(67)", "(25)(36)(47)", "(2463)"))
    rec.add("b1_to_b8", "(2463) conjugates b_1 to b_8", "literature", True,
            b1.conjugate_by(g) == b8)


def suite_count(rec: _Recorder, threads: int = 1, **_) -> None:
    bd = BranchData(7, 6)
    cls = classify_coverings(bd, threads=threads)
    rec.add("classes(7,6)", "isomorphism classes of degree-7 (2,2,2,1) covers over 6 points",
            "literature", 400, cls.class_count)
    rec.add("division_formula", "(7^5 - 7) / 42", "literature", 400, (7 ** 5 - 7) // 42)
    rec.add("connected_tuples_7_6", "connected tuples 7^5 - 7", "literature", 16800,
            cls.connected_tuples)
    rec.add("orbit_histogram_7_6", "every orbit has size 42", "derived", {42: 400},
            cls.orbit_size_histogram)
    rec.add("burnside_7_6", "orbit-counting lemma over the normalizer", "derived",
            cls.class_count, burnside_count(bd))
    rec.add("frobenius_7_6", "character-formula count of product-1 tuples", "derived",
            brute_force_tuple_count(7, 6), frobenius_tuple_count(7, 6))
    rec.add("product_one_total_7_6", "all product-1 tuples, 7^5", "derived", 16807,
            brute_force_tuple_count(7, 6))
    for p, b in SMALL_GRID:
        g = BranchData(p, b)
        rec.add(f"burnside_{p}_{b}", "direct orbit count equals orbit-counting lemma",
                "derived", classify_coverings(g, threads=threads).class_count,
                burnside_count(g))
        rec.add(f"frobenius_{p}_{b}", "character formula equals brute-force total", "derived",
                brute_force_tuple_count(p, b), frobenius_tuple_count(p, b))


def suite_genus_tower(rec: _Recorder, threads: int = 1, **_) -> None:
    cls = classify_coverings(BranchData(7, 6), threads=threads)
    reps = cls.representative_tuples()
    n = len(reps)
    tally = dict.fromkeys(("Y", "C", "closure", "iso", "connected", "galois", "dihedral",
                           "etale", "consistent"), 0)
    first = None
    for t in reps:
        tr = tower_report(t, cls.class_count)
        first = first or tr
        tally["Y"] += all(q.genus == 3 for q in tr.quotients)
        tally["C"] += tr.base_curve.genus == 2
        tally["closure"] += tr.galois_closure.genus == 8 and tr.fiber.genus_via_base == 8
        tally["iso"] += tr.quotients_isomorphic
        tally["connected"] += tr.fiber.report.connected
        tally["galois"] += tr.fiber.galois
        tally["dihedral"] += tr.fiber.group_tag == "dihedral" and tr.fiber.report.group_order == 14
        tally["etale"] += tr.fiber.etale_over_base
        tally["consistent"] += tr.consistent
    rec.add("genus_Y", "all 7 quotients by a reflection have genus 3", "literature", n, tally["Y"])
    rec.add("genus_C", "quotient by the rotations has genus 2", "literature", n, tally["C"])
    rec.add("genus_closure", "Galois closure has genus 8 (two Riemann-Hurwitz routes)",
            "derived", n, tally["closure"])
    rec.add("quotients_isomorphic", "the 7 reflection quotients are isomorphic covers",
            "literature", n, tally["iso"])
    rec.add("fiber_connected", "fiber product with the hyperelliptic cover is connected",
            "derived", n, tally["connected"])
    rec.add("fiber_galois_d7", "fiber product is Galois with dihedral group of order 14",
            "literature", n, tally["galois"] if tally["galois"] == tally["dihedral"] else -1)
    rec.add("fiber_etale", "fiber product is unramified over the genus-2 curve", "literature",
            n, tally["etale"])
    rec.add("genus_triple", "(closure, degree-2 curve, reflection quotient)", "derived",
            [8, 2, 3], list(first.genus_triple))
    rec.add("torsion_count", "(7^4 - 1) / 6 cyclic subgroups of order 7 in JC[7]",
            "literature", 400, first.torsion_count)
    rec.add("class_count", "N from the orbit classification", "literature", 400, first.class_count)
    rec.add("inferred_d", "400 = d * N forces exactly one cyclic etale cover", "literature",
            1, first.inferred_d)


def suite_field(rec: _Recorder, **_) -> None:
    rec.add("minimal_polynomial", "eta^3 + eta^2 - 2 eta - 1 from the 7th cyclotomic polynomial",
            "derived", list(MINPOLY), list(derive_minimal_polynomial(7)))
    rec.add("discriminant", "polynomial discriminant equals field discriminant 49", "derived",
            49, int(discriminant(poly(MINPOLY))))
    x = 4 - ETA * ETA
    rec.add("norm_4_minus_eta2_matrix", "norm via multiplication-matrix determinant",
            "derived", 7, x.norm())
    rec.add("norm_4_minus_eta2_resultant", "norm via resultant with the minimal polynomial",
            "derived", 7, norm_resultant(x))
    rec.add("norm_4_minus_eta2_embeddings", "norm via Sturm-certified embedding product",
            "derived", 7, norm_embeddings(x))
    sols = solve_det_equation(1)
    rec.add("det_equation_height_1", "eta solves N(4 - phi^2) = 7 with positivity", "derived",
            True, ETA in sols)
    rec.add("det_equation_integers", "(4 - n^2)^3 = 7 has no integer solution", "literature",
            [], [str(s) for s in solve_det_equation(10, integer_only=True)])
    rec.add("det_equation_height_0", "height-0 domain has no solution", "literature",
            [], [str(s) for s in solve_det_equation(0)])
    pol = classify_polarization_matrices(2)
    prym = OMatrix2(2, ETA, ETA, 2)
    rec.add("prym_shape_matrix", "[[2, eta], [eta, 2]] is a degree-7 polarization matrix",
            "derived", True, any(c.matrix == prym and c.prym_shape for c in pol))
    rec.add("no_integer_matrix", "no polarization matrix has only integer entries",
            "literature", 0,
            sum(1 for c in pol if all(e.is_rational() for e in c.matrix.entries())))


def suite_idempotents(rec: _Recorder, seed: int = 1, samples: int = 100, **_) -> None:
    eps = random_idempotents(seed, samples, height=3)
    results = [conjugate_idempotent(e) for e in eps]
    rec.add("idempotents_conjugated", "nontrivial idempotents conjugate to diag(0, 1)",
            "literature", samples, sum(r.verified for r in results))
    rec.add("basis_det_units", "eigenvector basis has unit determinant", "derived", samples,
            sum(r.basis_det.is_unit() for r in results))


SUITE_FUNCS: dict[str, Callable[..., None]] = {
    "dihedral-table": suite_dihedral_table,
    "conjugacy": suite_conjugacy,
    "count-400": suite_count,
    "genus-tower": suite_genus_tower,
    "field": suite_field,
    "idempotents": suite_idempotents,
}


def run_suite(name: str, threads: int = 1, seed: int = 1, timings: bool = False) -> Report:
    if name != "all" and name not in SUITE_FUNCS:
        raise KeyError(f"unknown suite {name!r}")
    report = Report(config={"command": "verify", "suite": name, "seed": seed})
    rec = _Recorder(report, timings)
    for s in (SUITES if name == "all" else (name,)):
        SUITE_FUNCS[s](rec, threads=threads, seed=seed)
    return report
