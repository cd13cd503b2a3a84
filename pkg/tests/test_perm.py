from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dihedralcovers.perm import (CycleSyntaxError, DegreeMismatch, Perm, PermGroup, are_conjugate,
                                 compose, generate, is_sharply_two_transitive, is_transitive,
                                 normalizer, parse_cycles, symmetric_group)


def perms(n: int = 7):
    return st.permutations(range(1, n + 1)).map(Perm)


class TestParse:
    def test_involution_a(self, a7):
        assert a7.images == (2, 1, 4, 3, 6, 5, 7)
        assert a7.fixed_points() == (7,)

    def test_identity(self):
        assert parse_cycles("()", 7) == Perm.identity(7)
        with pytest.raises(CycleSyntaxError):
            parse_cycles("", 5)

    def test_seven_cycle(self):
        s = parse_cycles("(1357642)", 7)
        assert s.cycles() == ((1, 3, 5, 7, 6, 4, 2),)

    def test_comma_and_juxtaposed_agree(self):
        assert parse_cycles("(1,3,5,7,6,4,2)") == parse_cycles("(1357642)")

    def test_two_digit_points_need_commas(self):
        p = parse_cycles("(1,11)(2,10)", 11)
        assert p(11) == 1 and p(10) == 2

    @pytest.mark.parametrize("bad", ["(12", "(1a)", "(11)", "(12)(23)", "(18)", "(0 1)", "12"])
    def test_rejects(self, bad):
        with pytest.raises(CycleSyntaxError):
            parse_cycles(bad, 7)

    @given(perms())
    def test_roundtrip(self, p):
        assert parse_cycles(str(p), 7) == p
        assert parse_cycles(p.compact(), 7) == p


class TestCompose:
    def test_left_to_right(self, a7, b1):
        assert compose(a7, b1).compact() == "(1357642)"
        assert (a7 * b1)(1) == b1(a7(1))

    def test_a_b3(self, a7):
        b3 = parse_cycles("(23)(47)(56)")
        assert compose(a7, b3).compact() == "(13742)"

    def test_involution_squares_to_identity(self, a7):
        assert (a7 * a7).is_identity()

    def test_degree_mismatch(self, a7):
        with pytest.raises(DegreeMismatch):
            a7 * Perm.identity(5)

    @given(perms(), perms(), perms())
    def test_associative(self, p, q, r):
        assert (p * q) * r == p * (q * r)

    @given(perms())
    def test_inverse_and_identity(self, p):
        e = Perm.identity(7)
        assert p * e == p == e * p
        assert (p * p.inverse()).is_identity()

    @given(perms(), perms())
    def test_conjugation_fixes_cycle_type(self, p, g):
        assert p.conjugate_by(g).cycle_type() == p.cycle_type()
        assert p.conjugate_by(g) == g * p * g.inverse()


class TestCycleData:
    def test_a(self, a7):
        assert a7.cycle_type() == (2, 2, 2, 1)
        assert a7.sign() == -1

    def test_identity(self):
        e = Perm.identity(7)
        assert e.cycle_type() == (1,) * 7 and e.sign() == 1

    def test_seven_cycle_even(self):
        s = parse_cycles("(1357642)")
        assert s.cycle_type() == (7,) and s.sign() == 1 and s.order == 7

    @given(perms(), perms())
    def test_sign_homomorphism(self, p, q):
        assert (p * q).sign() == p.sign() * q.sign()

    @given(perms())
    def test_cycle_type_partitions_degree(self, p):
        assert sum(p.cycle_type()) == 7
        assert p.order == math.lcm(*p.cycle_type())


class TestGroups:
    def test_dihedral_order(self, a7, b1):
        G = generate([a7, b1])
        assert G.order == 14 and is_transitive(G)

    def test_trivial_and_cyclic(self):
        assert generate([Perm.identity(7)]).order == 1
        assert generate([parse_cycles("(1234567)")]).order == 7

    def test_not_transitive(self, a7):
        G = generate([a7])
        assert not is_transitive(G)
        assert G.orbit(7) == frozenset({7})

    def test_symmetric(self):
        S = symmetric_group(7)
        assert S.order == 5040 and is_transitive(S)
        assert symmetric_group(4).is_closed()

    @settings(max_examples=30, deadline=None)
    @given(st.lists(perms(5), min_size=1, max_size=3))
    def test_lagrange(self, gens):
        G = generate(gens)
        assert 120 % G.order == 0
        assert G.is_closed()
        for g in gens:
            assert G.order % g.order == 0

    def test_normalizer_brute_vs_backtrack(self, a7, b1):
        D = generate([a7, b1])
        brute = normalizer(D, symmetric_group(7), method="brute")
        fast = normalizer(D, None, method="backtrack")
        assert brute == fast
        assert brute.order == 42
        assert is_sharply_two_transitive(brute)

    def test_normalizer_of_whole_group(self):
        S = symmetric_group(5)
        assert normalizer(S, S) == S

    def test_conjugate_b1_b8(self, a7, b1):
        b8 = parse_cycles("(25)(36)(47)")
        g = parse_cycles("(2463)")
        assert b1.conjugate_by(g) == b8
        G, H = generate([a7, b1]), generate([a7, b8])
        w = are_conjugate(G, H, symmetric_group(7))
        assert w is not None and G.conjugate(w) == H

    def test_2463_does_not_fix_a(self, a7, b1):
        # conjugating b1 alone is not enough; the witness has to be searched for
        g = parse_cycles("(2463)")
        assert a7.conjugate_by(g) != a7
        b8 = parse_cycles("(25)(36)(47)")
        assert generate([a7, b1]).conjugate(g) != generate([a7, b8])

    def test_not_conjugate(self, a7):
        C7 = generate([parse_cycles("(1234567)")])
        assert are_conjugate(generate([a7]), C7) is None

    def test_sorted_elements(self, a7, b1):
        G = generate([a7, b1])
        els = list(G)
        assert els == sorted(els, key=lambda p: p.images)
        assert isinstance(G, PermGroup)
