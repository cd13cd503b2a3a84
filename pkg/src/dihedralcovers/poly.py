"""Exact univariate polynomials over the rationals.

Coefficient lists run from the constant term upward. Used for Sturm
sequences, real root isolation and resultants; no floating point anywhere.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Poly = list[Fraction]


def poly(coeffs: Sequence[int | Fraction]) -> Poly:
    return trim([Fraction(c) for c in coeffs])


def trim(p: Poly) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Poly) -> int:
    return len(p) - 1


def evaluate(p: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: Poly) -> Poly:
    return trim([k * c for k, c in enumerate(p)][1:])


def divmod_poly(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = trim(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    r = list(a)
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        f = r[-1] / b[-1]
        q[shift] = f
        for i, c in enumerate(b):
            r[i + shift] -= f * c
        r = trim(r)
    return trim(q), r


def sturm_sequence(p: Poly) -> list[Poly]:
    seq = [trim(p), derivative(p)]
    while seq[-1]:
        _, r = divmod_poly(seq[-2], seq[-1])
        seq.append([-c for c in r])
    return seq[:-1]


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def sign_changes(seq: list[Poly], x: Fraction | None, at_infinity: int = 0) -> int:
    """Sign changes of the sequence at ``x``, or at ``+/-inf`` when ``x`` is None."""
    signs = []
    for q in seq:
        if x is None:
            s = _sign(q[-1]) * (at_infinity ** degree(q) if at_infinity < 0 else 1)
        else:
            s = _sign(evaluate(q, x))
        if s:
            signs.append(s)
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def count_roots(p: Poly, lo: Fraction | None = None, hi: Fraction | None = None) -> int:
    """Distinct real roots in ``(lo, hi]``; ``None`` means the matching infinity."""
    seq = sturm_sequence(p)
    v_lo = sign_changes(seq, lo, -1)
    v_hi = sign_changes(seq, hi, 1)
    return v_lo - v_hi


def cauchy_bound(p: Poly) -> Fraction:
    lead = abs(p[-1])
    return 1 + max(abs(c) / lead for c in p[:-1]) if len(p) > 1 else Fraction(1)


def isolate_real_roots(p: Poly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals ``(lo, hi]``, one per distinct real root, in increasing order."""
    seq = sturm_sequence(p)
    bound = cauchy_bound(p)
    out = []

    def rec(lo: Fraction, hi: Fraction, v_lo: int, v_hi: int) -> None:
        n = v_lo - v_hi
        if n == 0:
            return
        if n == 1:
            out.append((lo, hi))
            return
        mid = (lo + hi) / 2
        v_mid = sign_changes(seq, mid)
        rec(lo, mid, v_lo, v_mid)
        rec(mid, hi, v_mid, v_hi)

    lo, hi = -bound, bound
    rec(lo, hi, sign_changes(seq, lo), sign_changes(seq, hi))
    return out


def refine_root(p: Poly, lo: Fraction, hi: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Bisect an isolating interval of a simple root down to ``width``."""
    f_hi = evaluate(p, hi)
    if f_hi == 0:
        return hi, hi
    while hi - lo > width:
        mid = (lo + hi) / 2
        f_mid = evaluate(p, mid)
        if f_mid == 0:
            return mid, mid
        if _sign(f_mid) == _sign(f_hi):
            hi, f_hi = mid, f_mid
        else:
            lo = mid
    return lo, hi


def _det(rows: list[list[Fraction]]) -> Fraction:
    a = [list(r) for r in rows]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            if f:
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return det


def resultant(f: Poly, g: Poly) -> Fraction:
    """Resultant through the Sylvester matrix determinant."""
    f, g = trim(f), trim(g)
    m, n = degree(f), degree(g)
    if m < 0 or n < 0:
        return Fraction(0)
    if n == 0:
        return g[0] ** m
    if m == 0:
        return f[0] ** n
    size = m + n
    rows = []
    fr, gr = list(reversed(f)), list(reversed(g))
    for i in range(n):
        rows.append([Fraction(0)] * i + fr + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + gr + [Fraction(0)] * (size - n - 1 - i))
    return _det(rows)


def discriminant(f: Poly) -> Fraction:
    n = degree(f)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, derivative(f)) / f[-1]
