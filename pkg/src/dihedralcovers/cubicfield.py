"""Exact arithmetic in the ring of integers of the real cubic subfield of Q(zeta_7).

Elements are ``x0 + x1*eta + x2*eta**2`` with ``eta = zeta_7 + zeta_7**-1`` and
``eta**3 + eta**2 - 2*eta - 1 = 0``. The power basis ``Z[eta]`` is the full
maximal order (the polynomial discriminant 49 equals the field discriminant).

Modelling choices:

* The field is totally real, so for symmetric endomorphisms the Rosati
  involution acts trivially on entries; the dual ``phi^`` of a field element
  is taken to be ``phi`` itself, and a 2x2 matrix is symmetric exactly when
  it equals its transpose.
* The determinant of an element in the 3-dimensional analytic
  representation is identified with the field norm, i.e. the product of the
  three real embeddings.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from . import poly as P

__all__ = [
    "MINPOLY",
    "CubicInt",
    "OMatrix2",
    "DivisionStepExhausted",
    "NotIdempotent",
    "TrivialIdempotent",
    "BasisError",
    "derive_minimal_polynomial",
    "eta_root_intervals",
    "norm_resultant",
    "norm_embeddings",
    "is_totally_positive",
    "euclid_divmod",
    "euclid_gcd",
    "box",
    "solve_det_equation",
    "PolarizationCandidate",
    "classify_polarization_matrices",
    "IdempotentConjugation",
    "conjugate_idempotent",
    "idempotent_pool",
    "random_idempotents",
    "random_unimodular",
]

# eta^3 + eta^2 - 2 eta - 1, constant term first
MINPOLY = (-1, -2, 1, 1)
# eta^3 and eta^4 in the power basis
_ETA3 = (1, 2, -1)
_ETA4 = (-1, -1, 3)


class DivisionStepExhausted(RuntimeError):
    pass


class NotIdempotent(ValueError):
    pass


class TrivialIdempotent(ValueError):
    pass


class BasisError(RuntimeError):
    pass


def derive_minimal_polynomial(n: int = 7) -> tuple[int, ...]:
    """Minimal polynomial of ``zeta_n + zeta_n**-1`` for an odd prime ``n``.

    Powers of ``eta`` are computed in ``Z[zeta]/Phi_n`` and the first linear
    dependency among them is solved for exactly.
    """
    d = n - 1
    half = d // 2

    def reduce(full: list[int]) -> list[int]:
        # zeta^n = 1, then zeta^(n-1) = -(1 + zeta + ... + zeta^(n-2))
        red = [0] * n
        for k, c in enumerate(full):
            red[k % n] += c
        top = red[n - 1]
        return [red[k] - top for k in range(d)]

    def mul(a: list[int], b: list[int]) -> list[int]:
        out = [0] * (2 * d)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return reduce(out)

    full = [0] * n
    full[1] = full[n - 1] = 1
    eta = reduce(full)
    powers = [[1] + [0] * (d - 1)]
    for _ in range(half):
        powers.append(mul(powers[-1], eta))
    # solve sum_{k<half} c_k eta^k = -eta^half over Q
    rows = [[Fraction(powers[k][i]) for k in range(half)] + [Fraction(-powers[half][i])]
            for i in range(d)]
    sol = _solve_overdetermined(rows, half)
    if any(c.denominator != 1 for c in sol):
        raise AssertionError("non-integral minimal polynomial")
    return tuple(int(c) for c in sol) + (1,)


def _solve_overdetermined(rows: list[list[Fraction]], nvars: int) -> list[Fraction]:
    a = [list(r) for r in rows]
    piv_rows = []
    r = 0
    for col in range(nvars):
        piv = next((i for i in range(r, len(a)) if a[i][col] != 0), None)
        if piv is None:
            raise AssertionError("degenerate system")
        a[r], a[piv] = a[piv], a[r]
        for i in range(len(a)):
            if i != r and a[i][col] != 0:
                f = a[i][col] / a[r][col]
                a[i] = [u - f * v for u, v in zip(a[i], a[r])]
        piv_rows.append(r)
        r += 1
    for i in range(r, len(a)):
        if a[i][-1] != 0:
            raise AssertionError("inconsistent system: no dependency of this degree")
    return [a[i][-1] / a[i][i] for i in range(nvars)]


class CubicInt:
    """Element ``x0 + x1*eta + x2*eta**2`` of the maximal order."""

    __slots__ = ("c",)

    def __init__(self, x0: int = 0, x1: int = 0, x2: int = 0):
        self.c = (int(x0), int(x1), int(x2))

    @classmethod
    def coerce(cls, v: CubicInt | int) -> CubicInt:
        return v if isinstance(v, CubicInt) else cls(v)

    @classmethod
    def parse(cls, text: str) -> CubicInt:
        parts = text.strip().strip("()").split(",")
        if len(parts) != 3:
            raise ValueError(f"expected '(x0,x1,x2)', got {text!r}")
        return cls(*(int(p) for p in parts))

    def __iter__(self) -> Iterator[int]:
        return iter(self.c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.c == (other, 0, 0)
        return isinstance(other, CubicInt) and self.c == other.c

    def __hash__(self) -> int:
        return hash(self.c)

    def __lt__(self, other: CubicInt) -> bool:
        return self.c < other.c

    def __repr__(self) -> str:
        return f"CubicInt{self.c}"

    def __str__(self) -> str:
        return "({},{},{})".format(*self.c)

    def __bool__(self) -> bool:
        return self.c != (0, 0, 0)

    def __neg__(self) -> CubicInt:
        return CubicInt(-self.c[0], -self.c[1], -self.c[2])

    def __add__(self, other: CubicInt | int) -> CubicInt:
        o = CubicInt.coerce(other).c
        return CubicInt(self.c[0] + o[0], self.c[1] + o[1], self.c[2] + o[2])

    __radd__ = __add__

    def __sub__(self, other: CubicInt | int) -> CubicInt:
        o = CubicInt.coerce(other).c
        return CubicInt(self.c[0] - o[0], self.c[1] - o[1], self.c[2] - o[2])

    def __rsub__(self, other: CubicInt | int) -> CubicInt:
        return CubicInt.coerce(other) - self

    def __mul__(self, other: CubicInt | int) -> CubicInt:
        if isinstance(other, int):
            return CubicInt(self.c[0] * other, self.c[1] * other, self.c[2] * other)
        a0, a1, a2 = self.c
        b0, b1, b2 = other.c
        c3 = a1 * b2 + a2 * b1
        c4 = a2 * b2
        return CubicInt(
            a0 * b0 + c3 * _ETA3[0] + c4 * _ETA4[0],
            a0 * b1 + a1 * b0 + c3 * _ETA3[1] + c4 * _ETA4[1],
            a0 * b2 + a1 * b1 + a2 * b0 + c3 * _ETA3[2] + c4 * _ETA4[2],
        )

    __rmul__ = __mul__

    def __pow__(self, k: int) -> CubicInt:
        if k < 0:
            raise ValueError("negative powers need unit_inverse()")
        out, base = CubicInt(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    @property
    def height(self) -> int:
        return max(abs(v) for v in self.c)

    def is_rational(self) -> bool:
        return self.c[1] == 0 and self.c[2] == 0

    def mult_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Matrix of multiplication by ``self``; column ``k`` is ``self * eta**k``."""
        eta = CubicInt(0, 1, 0)
        cols = [self, self * eta, self * eta * eta]
        return tuple(tuple(col.c[i] for col in cols) for i in range(3))

    def trace(self) -> int:
        m = self.mult_matrix()
        return m[0][0] + m[1][1] + m[2][2]

    def norm(self) -> int:
        (a, b, c), (d, e, f), (g, h, i) = self.mult_matrix()
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def charpoly(self) -> tuple[int, int, int, int]:
        """Characteristic polynomial, constant term first, monic."""
        m = self.mult_matrix()
        tr = m[0][0] + m[1][1] + m[2][2]
        minors = sum(m[i][i] * m[j][j] - m[i][j] * m[j][i]
                     for i, j in ((0, 1), (0, 2), (1, 2)))
        return (-self.norm(), minors, -tr, 1)

    def adjoint(self) -> CubicInt:
        """``norm(self) / self``, an algebraic integer."""
        m = self.mult_matrix()
        # first column of the adjugate of m
        return CubicInt(
            m[1][1] * m[2][2] - m[1][2] * m[2][1],
            -(m[1][0] * m[2][2] - m[1][2] * m[2][0]),
            m[1][0] * m[2][1] - m[1][1] * m[2][0],
        )

    def field_div(self, other: CubicInt) -> tuple[Fraction, Fraction, Fraction]:
        """Exact quotient ``self / other`` in the field, as rational coordinates."""
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in the cubic field")
        q = self * other.adjoint()
        return tuple(Fraction(v, n) for v in q.c)

    def divides(self, other: CubicInt) -> bool:
        if not self:
            return not other
        n = self.norm()
        return all(v % n == 0 for v in (other * self.adjoint()).c)

    def exact_div(self, other: CubicInt) -> CubicInt:
        if not other.divides(self):
            raise ArithmeticError(f"{other} does not divide {self}")
        n = other.norm()
        return CubicInt(*((v // n) for v in (self * other.adjoint()).c))

    def is_unit(self) -> bool:
        return abs(self.norm()) == 1

    def unit_inverse(self) -> CubicInt:
        n = self.norm()
        if abs(n) != 1:
            raise ArithmeticError(f"{self} is not a unit")
        return self.adjoint() * n


ETA = CubicInt(0, 1, 0)
ONE = CubicInt(1)
ZERO = CubicInt(0)


@lru_cache(maxsize=None)
def eta_root_intervals(bits: int = 64) -> tuple[tuple[Fraction, Fraction], ...]:
    """Isolating intervals of the three conjugates of ``eta``, largest first.

    The order matches ``2 cos(2 pi k / 7)`` for ``k = 1, 2, 3``.
    """
    f = P.poly(MINPOLY)
    width = Fraction(1, 2 ** bits)
    ivs = [P.refine_root(f, lo, hi, width) for lo, hi in P.isolate_real_roots(f)]
    if len(ivs) != 3:
        raise AssertionError("minimal polynomial must have three real roots")
    return tuple(reversed(ivs))


def _interval_eval(coeffs: Sequence[int], lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Enclosure of ``sum c_k t^k`` for ``t`` in ``[lo, hi]``."""
    acc = (Fraction(0), Fraction(0))
    for c in reversed(coeffs):
        cands = [acc[0] * lo, acc[0] * hi, acc[1] * lo, acc[1] * hi]
        acc = (min(cands) + c, max(cands) + c)
    return acc


def embedding_intervals(x: CubicInt, bits: int = 64) -> list[tuple[Fraction, Fraction]]:
    return [_interval_eval(x.c, lo, hi) for lo, hi in eta_root_intervals(bits)]


def embeddings(x: CubicInt) -> list[float]:
    return [float((lo + hi) / 2) for lo, hi in embedding_intervals(x)]


def norm_resultant(x: CubicInt) -> int:
    """Norm as ``Res(minpoly, x0 + x1 t + x2 t^2)``; the minimal polynomial is monic."""
    r = P.resultant(P.poly(MINPOLY), P.poly(x.c))
    if r.denominator != 1:
        raise AssertionError("non-integral resultant")
    return int(r)


def norm_embeddings(x: CubicInt, max_bits: int = 4096) -> int:
    """Norm as the product of the three real embeddings, certified by intervals.

    Embeddings are enclosed with Sturm-isolated roots; precision doubles until
    the product interval is narrower than 1 and contains a single integer.
    """
    bits = 32
    while bits <= max_bits:
        lo, hi = Fraction(1), Fraction(1)
        for a, b in embedding_intervals(x, bits):
            cands = [lo * a, lo * b, hi * a, hi * b]
            lo, hi = min(cands), max(cands)
        if hi - lo < 1:
            ints = [n for n in range(int(lo) - 1, int(hi) + 2) if lo <= n <= hi]
            if len(ints) == 1:
                return ints[0]
        bits *= 2
    raise ArithmeticError("embedding product did not converge")


def is_totally_positive(x: CubicInt) -> bool:
    """All three real embeddings positive, decided by Sturm sign counting."""
    if x.is_rational():
        return x.c[0] > 0
    # x generates the field, so its characteristic polynomial is squarefree
    cp = P.poly(x.charpoly())
    if cp[0] == 0:
        return False
    return P.count_roots(cp, Fraction(0), None) == 3


def box(height: int) -> Iterator[CubicInt]:
    """All elements with coefficients in ``[-height, height]``, lexicographic order."""
    rng = range(-height, height + 1)
    for c in itertools.product(rng, repeat=3):
        yield CubicInt(*c)


def _round_half_up(q: Fraction) -> int:
    return (2 * q.numerator + q.denominator) // (2 * q.denominator)


def euclid_divmod(x: CubicInt, y: CubicInt, max_radius: int = 4) -> tuple[CubicInt, CubicInt]:
    """``x = q*y + r`` with ``|N(r)| < |N(y)|``.

    Starts from the coordinatewise rounding of ``x / y`` and searches boxes of
    growing radius around it; the smallest remainder norm wins, ties broken by
    coefficient order.
    """
    ny = abs(y.norm())
    if ny == 0:
        raise ZeroDivisionError("division by zero")
    centre = [_round_half_up(q) for q in x.field_div(y)]
    for radius in range(0, max_radius + 1):
        best = None
        offsets = range(-radius, radius + 1)
        for d in itertools.product(offsets, repeat=3):
            q = CubicInt(*(c + e for c, e in zip(centre, d)))
            r = x - q * y
            nr = abs(r.norm())
            key = (nr, q.c)
            if best is None or key < best[0]:
                best = (key, q, r)
        if best[0][0] < ny:
            return best[1], best[2]
    raise DivisionStepExhausted(f"no remainder below |N| = {ny} within radius {max_radius}")


def euclid_gcd(x: CubicInt, y: CubicInt) -> tuple[CubicInt, CubicInt, CubicInt]:
    """Extended Euclid: ``(g, u, v)`` with ``g = u*x + v*y`` dividing both inputs."""
    if not x and not y:
        raise ValueError("gcd(0, 0) is undefined")
    r0, r1 = x, y
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while r1:
        q, r = euclid_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    g, u, v = r0, s0, t0
    if u * x + v * y != g or not g.divides(x) or not g.divides(y):
        raise AssertionError("Bezout certificate failed")
    return g, u, v


def _canonical_sign(x: CubicInt) -> CubicInt:
    lead = next((v for v in x.c if v), 0)
    return -x if lead < 0 else x


def solve_det_equation(height: int, integer_only: bool = False) -> list[CubicInt]:
    """``phi`` of height at most ``height`` with ``N(4 - phi**2) == 7``, ``4 - phi**2 >> 0``.

    Solutions are reported once per pair ``{phi, -phi}``, with the first
    nonzero coordinate positive. ``integer_only`` restricts to rational ``phi``.
    """
    if height < 0:
        raise ValueError("height must be nonnegative")
    if integer_only:
        cands: Iterable[CubicInt] = (CubicInt(n) for n in range(-height, height + 1))
    else:
        cands = box(height)
    found = set()
    for phi in cands:
        t = 4 - phi * phi
        if t.norm() == 7 and is_totally_positive(t):
            found.add(_canonical_sign(phi))
    return sorted(found)


@dataclass(frozen=True)
class PolarizationCandidate:
    matrix: OMatrix2
    det: CubicInt
    prym_shape: bool


def classify_polarization_matrices(height: int) -> list[PolarizationCandidate]:
    """Symmetric totally positive ``[[alpha, beta], [beta, delta]]`` with determinant norm 7.

    Positivity means ``alpha`` and ``alpha*delta - beta**2`` totally positive
    (which forces ``delta`` totally positive as well).
    """
    if height < 0:
        raise ValueError("height must be nonnegative")
    elems = list(box(height))
    positive = [a for a in elems if is_totally_positive(a)]
    squares = [(b, b * b) for b in elems]
    out = []
    for alpha in positive:
        for delta in positive:
            ad = alpha * delta
            for beta, b2 in squares:
                det = ad - b2
                if det.norm() == 7 and is_totally_positive(det):
                    m = OMatrix2(alpha, beta, beta, delta)
                    out.append(PolarizationCandidate(m, det, alpha == 2 and delta == 2))
    out.sort(key=lambda c: c.matrix.key())
    return out


class OMatrix2:
    """2x2 matrix ``[[a, b], [c, d]]`` over the maximal order."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a, self.b, self.c, self.d = (CubicInt.coerce(v) for v in (a, b, c, d))

    @classmethod
    def identity(cls) -> OMatrix2:
        return cls(1, 0, 0, 1)

    @classmethod
    def diag(cls, x, y) -> OMatrix2:
        return cls(x, 0, 0, y)

    @classmethod
    def from_columns(cls, u: Sequence[CubicInt], v: Sequence[CubicInt]) -> OMatrix2:
        return cls(u[0], v[0], u[1], v[1])

    def entries(self) -> tuple[CubicInt, CubicInt, CubicInt, CubicInt]:
        return (self.a, self.b, self.c, self.d)

    def key(self) -> tuple:
        return tuple(e.c for e in self.entries())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, OMatrix2) and self.entries() == other.entries()

    def __hash__(self) -> int:
        return hash(self.entries())

    def __add__(self, o: OMatrix2) -> OMatrix2:
        return OMatrix2(*(x + y for x, y in zip(self.entries(), o.entries())))

    def __sub__(self, o: OMatrix2) -> OMatrix2:
        return OMatrix2(*(x - y for x, y in zip(self.entries(), o.entries())))

    def __mul__(self, o: OMatrix2) -> OMatrix2:
        return OMatrix2(
            self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d,
        )

    def apply(self, v: Sequence[CubicInt]) -> tuple[CubicInt, CubicInt]:
        return (self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1])

    def det(self) -> CubicInt:
        return self.a * self.d - self.b * self.c

    def trace(self) -> CubicInt:
        return self.a + self.d

    def transpose(self) -> OMatrix2:
        return OMatrix2(self.a, self.c, self.b, self.d)

    def is_symmetric(self) -> bool:
        return self.b == self.c

    @property
    def height(self) -> int:
        return max(e.height for e in self.entries())

    def inverse(self) -> OMatrix2:
        """Inverse over the order; requires a unit determinant."""
        u = self.det().unit_inverse()
        return OMatrix2(self.d * u, -self.b * u, -self.c * u, self.a * u)

    def __repr__(self) -> str:
        return f"OMatrix2({self.a}, {self.b}, {self.c}, {self.d})"

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


DIAG01 = OMatrix2.diag(0, 1)


@dataclass(frozen=True)
class IdempotentConjugation:
    idempotent: OMatrix2
    g: OMatrix2
    m0: tuple[CubicInt, CubicInt]
    m1: tuple[CubicInt, CubicInt]
    basis_det: CubicInt
    verified: bool


def _primitive_kernel_vector(m: OMatrix2) -> tuple[CubicInt, CubicInt]:
    """Generator of ``ker m`` inside ``O^2`` for a rank-1 matrix ``m``."""
    row = (m.a, m.b) if (m.a or m.b) else (m.c, m.d)
    if not (row[0] or row[1]):
        raise BasisError("zero matrix has no rank-1 kernel")
    v = (row[1], -row[0])
    g, _, _ = euclid_gcd(v[0], v[1])
    return (v[0].exact_div(g), v[1].exact_div(g))


def conjugate_idempotent(eps: OMatrix2) -> IdempotentConjugation:
    """Find ``g`` with ``g * eps * g**-1 == diag(0, 1)`` via the two eigenmodules.

    ``m0`` spans ``ker eps`` and ``m1`` spans ``ker(eps - 1)``; both are made
    primitive with the Euclidean gcd, and ``g`` is the inverse of the matrix
    with columns ``m0, m1``.
    """
    if eps * eps != eps:
        raise NotIdempotent(f"{eps} is not idempotent")
    if eps == OMatrix2(0, 0, 0, 0) or eps == OMatrix2.identity():
        raise TrivialIdempotent(f"{eps} is a trivial idempotent")
    m0 = _primitive_kernel_vector(eps)
    m1 = _primitive_kernel_vector(eps - OMatrix2.identity())
    if eps.apply(m0) != (ZERO, ZERO) or eps.apply(m1) != m1:
        raise BasisError("eigenvector check failed")
    basis = OMatrix2.from_columns(m0, m1)
    bdet = basis.det()
    if not bdet.is_unit():
        raise BasisError(f"eigenvectors span an index-{abs(bdet.norm())} sublattice")
    g = basis.inverse()
    verified = g * eps * basis == DIAG01 and g * basis == OMatrix2.identity()
    if not verified:
        raise AssertionError("conjugation certificate failed")
    return IdempotentConjugation(eps, g, m0, m1, bdet, verified)


@lru_cache(maxsize=None)
def idempotent_pool(height: int = 3) -> tuple[OMatrix2, ...]:
    """Every nontrivial idempotent ``[[a, b], [c, 1-a]]`` with all entries of height <= ``height``.

    Nontrivial idempotents have trace 1 and determinant 0, so
    ``b*c = a*(1-a)``; ``c`` is found by exact division.
    """
    elems = list(box(height))
    nonzero = [(b, b.adjoint(), b.norm()) for b in elems if b]
    out = []
    for a in elems:
        if (1 - a).height > height:
            continue
        t = a * (1 - a)
        if not t:
            for c in elems:
                out.append(OMatrix2(a, 0, c, 1 - a))
        for b, adj, n in nonzero:
            q = t * adj
            if all(v % n == 0 for v in q.c):
                c = CubicInt(*(v // n for v in q.c))
                if c.height <= height:
                    out.append(OMatrix2(a, b, c, 1 - a))
    out.sort(key=OMatrix2.key)
    return tuple(out)


def random_idempotents(seed: int, count: int, height: int = 3) -> list[OMatrix2]:
    pool = idempotent_pool(height)
    return random.Random(seed).sample(pool, count)


def random_unimodular(rng: random.Random, height: int = 3, steps: int = 3) -> OMatrix2:
    """Product of elementary and unit-diagonal matrices, redrawn until within ``height``."""
    units = [ONE, -ONE, ETA, ETA * ETA - 1, -ETA]
    while True:
        h = OMatrix2.identity()
        for _ in range(steps):
            t = CubicInt(*(rng.randint(-1, 1) for _ in range(3)))
            kind = rng.randrange(3)
            if kind == 0:
                e = OMatrix2(1, t, 0, 1)
            elif kind == 1:
                e = OMatrix2(1, 0, t, 1)
            else:
                e = OMatrix2.diag(rng.choice(units), rng.choice(units))
            h = h * e
        if h.height <= height:
            return h
