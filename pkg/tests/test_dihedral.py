from __future__ import annotations

import itertools

import pytest

from dihedralcovers.dihedral import (ProfileViolation, DihedralSubgroup, candidate_table,
                                     enumerate_dihedral_subgroups, fixed_point_profile,
                                     involution_pair_class, is_odd_prime, standard_dihedral,
                                     standard_pair)
from dihedralcovers.perm import Perm, generate, parse_cycles, symmetric_group

TABLE_B = ["(23)(45)(67)", "(23)(46)(57)", "(23)(47)(56)", "(24)(35)(67)", "(24)(36)(57)",
           "(24)(37)(56)", "(25)(34)(67)", "(25)(36)(47)", "(25)(37)(46)", "(26)(34)(57)",
           "(26)(35)(47)", "(26)(37)(45)"]
TABLE_S = ["(1357642)", "(1367542)", "(13742)", "(1457632)", "(1467532)", "(14732)",
           "(15762)", "(1537462)", "(1547362)", "(16752)", "(1637452)", "(1647352)"]


def test_odd_primes():
    assert [n for n in range(20) if is_odd_prime(n)] == [3, 5, 7, 11, 13, 17, 19]


def test_standard_pair():
    a, b = standard_pair(7)
    assert str(a) == "(1,2)(3,4)(5,6)"
    assert b.compact() == "(23)(45)(67)"
    assert (a * b).compact() == "(1357642)"
    with pytest.raises(ValueError):
        standard_pair(9)


class TestPairClass:
    def test_dihedral(self, a7, b1):
        c = involution_pair_class(a7, b1)
        assert c.dihedral and c.subgroup.group.order == 14

    def test_order_five(self, a7):
        c = involution_pair_class(a7, parse_cycles("(23)(47)(56)"))
        assert not c.dihedral and c.reason == "product-order-5"

    def test_same_involution(self, a7):
        c = involution_pair_class(a7, a7)
        assert not c.dihedral and c.reason == "product-order-1"

    def test_not_involution(self, a7):
        c = involution_pair_class(a7, parse_cycles("(123)"))
        assert c.reason == "not-involution"

    def test_exhaustive_105_squared(self):
        # 105 fixed-point involutions of shape (2,2,2,1) in S_7
        invs = [g for g in symmetric_group(7) if g.cycle_type() == (2, 2, 2, 1)]
        assert len(invs) == 105
        dihedral = 0
        for x, y in itertools.product(invs, repeat=2):
            c = involution_pair_class(x, y)
            if c.dihedral:
                dihedral += 1
                assert generate([x, y]).order == 14
            else:
                assert c.reason.startswith("product-order-")
        # 120 subgroups, each with 7 * 6 ordered reflection pairs
        assert dihedral == 120 * 42

    def test_dihedral_pairs_share_no_transposition(self):
        a, _ = standard_pair(7)
        for row in candidate_table(7):
            shared = set(a.cycles()) & set(row.b.cycles())
            if row.dihedral:
                assert not shared


class TestProfile:
    def test_standard(self, a7, b1):
        prof = fixed_point_profile(standard_dihedral(7))
        assert prof[7] == a7 and prof[1] == b1
        assert sorted(prof) == list(range(1, 8))
        assert len(set(prof.values())) == 7

    def test_violation(self, a7):
        fake = DihedralSubgroup(generate([a7]), a7, (a7,), 7)
        with pytest.raises(ProfileViolation):
            fixed_point_profile(fake)


class TestCandidateTable:
    def test_rows(self):
        rows = candidate_table(7)
        assert [r.b.compact() for r in rows] == TABLE_B
        assert [r.s.compact() for r in rows] == TABLE_S
        assert [r.index for r in rows if r.dihedral] == [1, 2, 4, 5, 8, 9, 11, 12]

    def test_excludes_2p(self):
        assert all(r.b(2) != 7 for r in candidate_table(7))

    def test_p5(self):
        rows = candidate_table(5)
        assert len(rows) == 2
        assert all(r.dihedral for r in rows)


class TestEnumeration:
    def test_p7(self):
        enum = enumerate_dihedral_subgroups(7)
        assert enum.count == 120 == 5040 // 42
        rep = enum.representative.group
        for d, g in zip(enum.subgroups, enum.witnesses):
            assert rep.conjugate(g) == d.group

    def test_methods_agree(self):
        pairs = enumerate_dihedral_subgroups(7, method="pairs")
        cycles = enumerate_dihedral_subgroups(7, method="cycles")
        assert [d.group for d in pairs.subgroups] == [d.group for d in cycles.subgroups]

    @pytest.mark.parametrize("p,count", [(3, 1), (5, 6)])
    def test_small(self, p, count):
        assert enumerate_dihedral_subgroups(p).count == count

    def test_p3_is_s3(self):
        enum = enumerate_dihedral_subgroups(3)
        assert enum.subgroups[0].group == symmetric_group(3)

    def test_bad_method(self):
        with pytest.raises(ValueError):
            enumerate_dihedral_subgroups(7, method="magic")
        with pytest.raises(ValueError):
            enumerate_dihedral_subgroups(11, method="pairs")

    def test_conjugate_subgroup_keeps_profile(self):
        D = standard_dihedral(7)
        g = parse_cycles("(2463)")
        E = D.conjugate(g)
        for pt, r in fixed_point_profile(D).items():
            assert fixed_point_profile(E)[g.inverse()(pt)] == r.conjugate_by(g)
        assert E.rotation == D.rotation.conjugate_by(g)
        assert isinstance(E.rotations()[0], Perm)
