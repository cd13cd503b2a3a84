from __future__ import annotations

from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from dihedralcovers.poly import (count_roots, derivative, discriminant, divmod_poly, evaluate,
                                 isolate_real_roots, poly, refine_root, resultant, trim)

MINPOLY = poly([-1, -2, 1, 1])


def test_trim_and_derivative():
    assert trim([Fraction(1), Fraction(0)]) == [1]
    assert derivative(poly([1, 2, 3])) == [2, 6]


def test_three_real_roots():
    assert count_roots(MINPOLY) == 3
    assert count_roots(MINPOLY, Fraction(0), None) == 1
    ivs = isolate_real_roots(MINPOLY)
    assert len(ivs) == 3
    assert all(hi <= lo2 for (_, hi), (lo2, _) in zip(ivs, ivs[1:]))


def test_refine_two_cos():
    # largest root is 2 cos(2 pi / 7) = 1.24698...
    lo, hi = refine_root(MINPOLY, *isolate_real_roots(MINPOLY)[-1], Fraction(1, 10 ** 9))
    assert Fraction(124697, 100000) < lo <= hi < Fraction(124698, 100000)


def test_discriminant_49():
    assert discriminant(MINPOLY) == 49
    assert discriminant(poly([-2, 0, 1])) == 8


def test_resultant_shared_root():
    assert resultant(poly([-1, 1]), poly([-1, 0, 1])) == 0
    assert resultant(poly([-2, 1]), poly([-1, 0, 1])) == 3


ints = st.integers(-20, 20)


@given(st.lists(ints, min_size=1, max_size=6), st.lists(ints, min_size=1, max_size=4))
def test_division_identity(a, b):
    pa, pb = poly(a), poly(b)
    if not pb:
        return
    q, r = divmod_poly(pa, pb)
    assert len(r) < len(pb)
    for x in range(-3, 4):
        assert evaluate(pa, Fraction(x)) == evaluate(q, Fraction(x)) * evaluate(pb, Fraction(x)) \
            + evaluate(r, Fraction(x))


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=4, unique=True))
def test_sturm_counts_known_roots(roots):
    p = poly([1])
    for r in roots:
        p = trim([a - r * b for a, b in zip([0] + p, p + [0])])
    assert count_roots(p) == len(roots)
    assert count_roots(p, Fraction(0), Fraction(5)) == sum(1 for r in roots if r > 0)
