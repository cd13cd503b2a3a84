"""Branched coverings of the line with dihedral monodromy.

A covering of degree ``p`` branched over ``b`` fixed points is encoded by a
monodromy tuple ``(c_1, ..., c_b)`` of reflections of the standard dihedral
group ``D_p`` with ``c_1 c_2 ... c_b = 1``. Two tuples give isomorphic
coverings when they are simultaneously conjugate by an element of the
normalizer of ``D_p`` in ``S_p``; the normalizer is computed, never assumed.

Branch points carry no coordinates. The monodromy data alone determines the
combinatorial class of a covering, as in the Riemann existence theorem.

Reflections are indexed ``0..p-1`` by their fixed point minus one, so a tuple
of reflections is a string of base-``p`` digits. Only the first ``b - 1``
entries are free; the last one is forced by the product condition.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from . import kernels
from .dihedral import DihedralSubgroup, is_odd_prime, standard_dihedral
from .perm import (Perm, PermGroup, generate, is_transitive, normalizer,
                   is_sharply_two_transitive, symmetric_group)

__all__ = [
    "BranchData",
    "ParityError",
    "BudgetExceeded",
    "GenusError",
    "DisconnectedProduct",
    "CoverSpace",
    "cover_space",
    "MonodromyTuple",
    "enumerate_tuples",
    "Classification",
    "classify_coverings",
    "burnside_count",
    "frobenius_tuple_count",
    "brute_force_tuple_count",
    "dihedral_reflection_characters",
    "riemann_hurwitz_genus",
    "CoverReport",
    "cover_report",
    "identify_group",
    "coset_action",
    "coset_action_cover",
    "hyperelliptic_tuple",
    "FiberProduct",
    "fiber_product",
    "tuple_isomorphism",
    "TowerReport",
    "tower_report",
    "classification_record",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 10 ** 8
CHUNK = 1 << 16


class ParityError(ValueError):
    """A product of an odd number of odd permutations cannot be the identity."""


class BudgetExceeded(RuntimeError):
    pass


class GenusError(ValueError):
    pass


class DisconnectedProduct(RuntimeError):
    pass


@dataclass(frozen=True)
class BranchData:
    prime: int
    branch_count: int

    def __post_init__(self):
        if not is_odd_prime(self.prime):
            raise ValueError(f"{self.prime} is not an odd prime")
        if self.branch_count < 2:
            raise ValueError("need at least two branch points")
        if self.branch_count % 2:
            raise ParityError(f"b = {self.branch_count} is odd: no product of "
                              "an odd number of reflections is the identity")

    @property
    def free_entries(self) -> int:
        return self.branch_count - 1

    @property
    def total_codes(self) -> int:
        return self.prime ** (self.branch_count - 1)


class CoverSpace:
    """The standard ``D_p`` with multiplication tables and its normalizer action."""

    def __init__(self, p: int):
        self.prime = p
        self.dihedral: DihedralSubgroup = standard_dihedral(p)
        self.reflections = self.dihedral.reflections
        self.elements: tuple[Perm, ...] = self.reflections + self.dihedral.rotations()
        self.order = len(self.elements)
        self.index = {g: i for i, g in enumerate(self.elements)}
        if len(self.index) != 2 * p:
            raise AssertionError("standard dihedral group has wrong order")
        self.identity = self.index[Perm.identity(p)]
        self.mul = [self.index[x * y] for x in self.elements for y in self.elements]
        self.inv = [self.index[x.inverse()] for x in self.elements]
        ambient = symmetric_group(p) if p <= 7 else None
        self.normalizer: PermGroup = normalizer(self.dihedral.group, ambient)
        self.action = [self.reflection_action(g) for g in self.normalizer]

    def reflection_action(self, g: Perm) -> list[int]:
        """Permutation of reflection indices induced by conjugation with ``g``."""
        return [self.index[r.conjugate_by(g)] for r in self.reflections]

    def forced_last(self, digits: Sequence[int]) -> int:
        x = digits[0]
        m = self.order
        for d in digits[1:]:
            x = self.mul[x * m + d]
        return self.inv[x]

    def decode(self, code: int, b: int) -> tuple[int, ...]:
        digits = []
        for _ in range(b - 1):
            code, d = divmod(code, self.prime)
            digits.append(d)
        digits.reverse()
        return tuple(digits) + (self.forced_last(digits),)

    def encode(self, indices: Sequence[int]) -> int:
        code = 0
        for d in indices[:-1]:
            code = code * self.prime + d
        return code

    def normalizer_certificate(self) -> dict[str, object]:
        N = self.normalizer
        p = self.prime
        return {
            "order": N.order,
            "expected_order": p * (p - 1),
            "sharply_2_transitive": is_sharply_two_transitive(N),
            "contains_dihedral": self.dihedral.group.is_subgroup_of(N),
        }


@lru_cache(maxsize=None)
def cover_space(p: int) -> CoverSpace:
    return CoverSpace(p)


@dataclass(frozen=True)
class MonodromyTuple:
    perms: tuple[Perm, ...]
    ambient: DihedralSubgroup

    @classmethod
    def from_indices(cls, indices: Sequence[int], space: CoverSpace) -> MonodromyTuple:
        return cls(tuple(space.reflections[i] for i in indices), space.dihedral)

    @property
    def degree(self) -> int:
        return self.ambient.prime

    def product(self) -> Perm:
        out = Perm.identity(self.degree)
        for c in self.perms:
            out = out * c
        return out

    def group(self) -> PermGroup:
        return generate(self.perms)

    def is_connected(self) -> bool:
        return is_transitive(self.group())

    def is_valid(self) -> bool:
        refl = set(self.ambient.reflections)
        return all(c in refl for c in self.perms) and self.product().is_identity()

    def conjugate(self, g: Perm) -> MonodromyTuple:
        return MonodromyTuple(tuple(c.conjugate_by(g) for c in self.perms), self.ambient)

    def cycle_strings(self) -> list[str]:
        return [c.compact() for c in self.perms]

    def fixed_points(self) -> tuple[int, ...]:
        return tuple(c.fixed_points()[0] for c in self.perms)


def enumerate_tuples(bd: BranchData) -> Iterator[MonodromyTuple]:
    """Stream all connected tuples in code order.

    The forced last entry is checked to be a reflection for every tuple; the
    ``p`` constant tuples are skipped since they generate a group of order 2.
    """
    space = cover_space(bd.prime)
    p, b = bd.prime, bd.branch_count
    for code in range(bd.total_codes):
        idx = space.decode(code, b)
        if idx[-1] >= p:
            raise AssertionError(f"forced entry of code {code} is not a reflection")
        if all(i == idx[0] for i in idx):
            continue
        yield MonodromyTuple.from_indices(idx, space)


@dataclass
class Classification:
    prime: int
    branch_count: int
    total_tuples: int
    connected_tuples: int
    class_count: int
    orbit_size_histogram: dict[int, int]
    normalizer_order: int
    representatives: list[tuple[int, ...]] = field(repr=False)
    orbit_sizes: list[int] = field(repr=False)

    def representative_tuples(self) -> list[MonodromyTuple]:
        space = cover_space(self.prime)
        return [MonodromyTuple.from_indices(r, space) for r in self.representatives]


def _chunks(total: int, size: int) -> list[tuple[int, int]]:
    return [(lo, min(lo + size, total)) for lo in range(0, total, size)]


def classify_coverings(bd: BranchData, threads: int = 1, budget: int = DEFAULT_BUDGET,
                       backend: str | None = None) -> Classification:
    """Orbits of connected tuples under simultaneous normalizer conjugation.

    Each orbit is represented by its lexicographically smallest index tuple.
    Orbit sizes come from stabilizer orders, so free action is an output of
    the computation and not an assumption.
    """
    space = cover_space(bd.prime)
    p, b = bd.prime, bd.branch_count
    total = bd.total_codes
    if total > budget:
        raise BudgetExceeded(f"{total} tuples exceed the enumeration budget {budget}")
    kern = kernels.get_backend(backend)
    nfree = b - 1
    action = space.action

    def work(span: tuple[int, int]) -> list[tuple[int, int]]:
        return kern.scan_orbits(p, nfree, span[0], span[1], space.mul, space.inv, action)

    spans = _chunks(total, CHUNK)
    if threads > 1 and len(spans) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(work, spans))
    else:
        parts = [work(s) for s in spans]

    n_order = space.normalizer.order
    reps, sizes = [], []
    for part in parts:
        for code, stab in part:
            if stab == 0 or n_order % stab:
                raise AssertionError(f"bad stabilizer order {stab} at code {code}")
            reps.append(space.decode(code, b))
            sizes.append(n_order // stab)
    connected = total - p
    if sum(sizes) != connected:
        raise AssertionError(f"orbit sizes sum to {sum(sizes)}, expected {connected}")
    return Classification(
        prime=p,
        branch_count=b,
        total_tuples=total,
        connected_tuples=connected,
        class_count=len(reps),
        orbit_size_histogram=dict(sorted(Counter(sizes).items())),
        normalizer_order=n_order,
        representatives=reps,
        orbit_sizes=sizes,
    )


def _words_with_trivial_product(space: CoverSpace, letters: Sequence[int], b: int) -> int:
    m = space.order
    counts: dict[int, int] = {space.identity: 1}
    for _ in range(b):
        nxt: dict[int, int] = defaultdict(int)
        for x, n in counts.items():
            row = x * m
            for f in letters:
                nxt[space.mul[row + f]] += n
        counts = nxt
    return counts.get(space.identity, 0)


def burnside_count(bd: BranchData, group: Sequence[Perm] | PermGroup | None = None) -> int:
    """Orbit count as the average number of fixed connected tuples.

    A tuple is fixed by ``g`` exactly when every entry is a reflection that
    ``g`` centralizes, so fixed tuples are counted as words over that subset
    (dynamic programming over the group), minus the constant words.
    """
    space = cover_space(bd.prime)
    elems = list(space.normalizer if group is None else group)
    total = 0
    for g in elems:
        act = space.reflection_action(g)
        fixed = [k for k in range(bd.prime) if act[k] == k]
        total += _words_with_trivial_product(space, fixed, bd.branch_count) - len(fixed)
    q, r = divmod(total, len(elems))
    if r:
        raise AssertionError(f"fixed-point total {total} not divisible by {len(elems)}")
    return q


def dihedral_reflection_characters(p: int) -> list[tuple[int, int]]:
    """``(degree, value on a reflection)`` for each irreducible character of ``D_p``.

    Two linear characters (trivial and sign) and ``(p-1)/2`` two-dimensional
    ones, whose reflection matrix ``[[1, 0], [0, -1]]`` has trace 0.
    """
    refl_matrix = ((1, 0), (0, -1))
    two_dim_value = refl_matrix[0][0] + refl_matrix[1][1]
    return [(1, 1), (1, -1)] + [(2, two_dim_value)] * ((p - 1) // 2)


def frobenius_tuple_count(p: int, b: int) -> int:
    """Number of ``b``-tuples of reflections with product 1, disconnected ones included.

    Character formula ``(r^b / |G|) * sum_chi chi(c)^b / chi(1)^(b-2)`` with
    ``r = p`` reflections forming a single conjugacy class.
    """
    if not is_odd_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if b % 2:
        return 0
    chars = dihedral_reflection_characters(p)
    if sum(d * d for d, _ in chars) != 2 * p:
        raise AssertionError("character degrees do not match the group order")
    s = sum(Fraction(v ** b) / Fraction(d) ** (b - 2) for d, v in chars)
    value = Fraction(p ** b, 2 * p) * s
    if value.denominator != 1:
        raise AssertionError(f"non-integral character count {value}")
    return int(value)


def brute_force_tuple_count(p: int, b: int, backend: str | None = None) -> int:
    """Enumerate all ``p**b`` reflection tuples and count those with product 1."""
    space = cover_space(p)
    kern = kernels.get_backend(backend)
    return kern.count_product_one(b, space.mul, space.order, space.identity, list(range(p)))


def riemann_hurwitz_genus(degree: int, cycle_types: Sequence[Sequence[int]],
                          base_genus: int = 0) -> int:
    """Genus ``g`` with ``2g - 2 = degree (2 base_genus - 2) + sum (len - 1)``."""
    ram = 0
    for ct in cycle_types:
        if sum(ct) != degree or any(c < 1 for c in ct):
            raise ValueError(f"{tuple(ct)} is not a partition of {degree}")
        ram += sum(c - 1 for c in ct)
    euler = degree * (2 * base_genus - 2) + ram
    if euler % 2:
        raise GenusError(f"odd ramification total {ram} for degree {degree}")
    g = euler // 2 + 1
    if g < 0:
        raise GenusError(f"negative genus {g}")
    return g


@dataclass(frozen=True)
class CoverReport:
    degree: int
    cycle_types: tuple[tuple[int, ...], ...]
    total_ramification: int
    genus: int
    connected: bool
    group_tag: str
    group_order: int
    base_genus: int = 0

    def as_dict(self) -> dict[str, object]:
        return {
            "degree": self.degree,
            "cycle_types": [list(c) for c in self.cycle_types],
            "total_ramification": self.total_ramification,
            "genus": self.genus,
            "connected": self.connected,
            "group": self.group_tag,
            "group_order": self.group_order,
            "base_genus": self.base_genus,
        }


def identify_group(G: PermGroup) -> str:
    n = G.order
    orders = [g.order for g in G]
    if n in orders:
        return "cyclic"
    if n % 2 == 0 and n >= 4:
        m = n // 2
        for r in G:
            if r.order == m or (m == 2 and r.order == 2):
                rot = {r ** k for k in range(m)}
                if len(rot) == m and all(g.order == 2 for g in G if g not in rot):
                    return "dihedral"
    return f"other({n})"


def cover_report(perms: Sequence[Perm], base_genus: int = 0) -> CoverReport:
    degree = perms[0].degree
    types = tuple(c.cycle_type() for c in perms)
    G = generate(perms)
    connected = is_transitive(G)
    genus = riemann_hurwitz_genus(degree, types, base_genus) if connected else -1
    return CoverReport(
        degree=degree,
        cycle_types=types,
        total_ramification=sum(sum(x - 1 for x in ct) for ct in types),
        genus=genus,
        connected=connected,
        group_tag=identify_group(G),
        group_order=G.order,
        base_genus=base_genus,
    )


def coset_action(t: MonodromyTuple, H: PermGroup) -> tuple[Perm, ...]:
    """Action of each ``c_i`` on the right cosets ``H x`` of ``H`` in the ambient group.

    Cosets are numbered by their smallest element in the sorted ambient
    element list, which makes the labelling deterministic.
    """
    ambient = t.ambient.group
    if not H.is_subgroup_of(ambient) or not H.is_closed():
        raise ValueError("H is not a subgroup of the ambient dihedral group")
    label: dict[Perm, int] = {}
    reps: list[Perm] = []
    for x in ambient:
        if x in label:
            continue
        k = len(reps)
        reps.append(x)
        for h in H:
            label[h * x] = k
    return tuple(Perm([label[x * c] + 1 for x in reps]) for c in t.perms)


def coset_action_cover(t: MonodromyTuple, H: PermGroup) -> CoverReport:
    return cover_report(coset_action(t, H))


def hyperelliptic_tuple(b: int) -> tuple[Perm, ...]:
    """Degree-2 monodromy ramified over every one of the ``b`` points."""
    swap = Perm([2, 1])
    return (swap,) * b


@dataclass(frozen=True)
class FiberProduct:
    report: CoverReport
    base_report: CoverReport
    factor_report: CoverReport
    ramification_over_base: tuple[tuple[int, ...], ...]
    etale_over_base: bool
    galois: bool
    group_tag: str
    genus_via_base: int
    perms: tuple[Perm, ...] = field(repr=False)


def fiber_product(h_tuple: Sequence[Perm], fbar_tuple: Sequence[Perm]) -> FiberProduct:
    """Product action of two monodromy tuples over the same branch points.

    Point ``(i, k)`` of the product is numbered ``(i - 1) * deg_f + k``. The
    projection to the first factor is unramified over a branch point when
    every product cycle has the same length as the ``h``-cycle below it.
    """
    if len(h_tuple) != len(fbar_tuple):
        raise ValueError(f"branch mismatch: {len(h_tuple)} vs {len(fbar_tuple)} points")
    n1, n2 = h_tuple[0].degree, fbar_tuple[0].degree
    if any(h.cycle_type() != (2,) for h in h_tuple) or n1 != 2:
        raise ValueError("first tuple must be degree 2 and ramified at every point")
    prod = tuple(
        Perm([(h(i) - 1) * n2 + f(k) for i in range(1, n1 + 1) for k in range(1, n2 + 1)])
        for h, f in zip(h_tuple, fbar_tuple)
    )
    G = generate(prod)
    if not is_transitive(G):
        raise DisconnectedProduct("fiber product is disconnected")
    report = cover_report(prod)
    base = cover_report(h_tuple)

    ram = []
    for h, c in zip(h_tuple, prod):
        idx = []
        for cyc in c.cycles(include_fixed=True):
            i = (cyc[0] - 1) // n2 + 1
            h_len = next(len(hc) for hc in h.cycles(include_fixed=True) if i in hc)
            q, r = divmod(len(cyc), h_len)
            if r:
                raise AssertionError("product cycle length not a multiple of its image")
            idx.append(q)
        ram.append(tuple(sorted(idx, reverse=True)))
    etale = all(e == 1 for row in ram for e in row)
    # over each branch point h has a single point, so each row partitions deg_f
    genus_via_base = riemann_hurwitz_genus(n2, ram, base.genus)

    projected = tuple(Perm([(c(k) - 1) % n2 + 1 for k in range(1, n2 + 1)]) for c in prod)
    if projected != tuple(fbar_tuple):
        raise AssertionError("projection to the second factor does not recover it")
    return FiberProduct(
        report=report,
        base_report=base,
        factor_report=cover_report(projected),
        ramification_over_base=tuple(ram),
        etale_over_base=etale,
        galois=G.order == report.degree,
        group_tag=report.group_tag,
        genus_via_base=genus_via_base,
        perms=prod,
    )


def tuple_isomorphism(t1: Sequence[Perm], t2: Sequence[Perm]) -> Perm | None:
    """``g`` with ``t1[i].conjugate_by(g) == t2[i]`` for all ``i``, or ``None``.

    Both tuples must generate transitive groups; a relabelling is then fixed
    by the image of point 1 and propagated along the generators.
    """
    if len(t1) != len(t2):
        return None
    n = t1[0].degree
    if not is_transitive(generate(t1)):
        raise ValueError("tuple_isomorphism needs a transitive first tuple")
    for start in range(1, n + 1):
        phi = {1: start}
        todo = [1]
        ok = True
        while todo and ok:
            k = todo.pop()
            for x, y in zip(t1, t2):
                src, dst = x(k), y(phi[k])
                if src in phi:
                    if phi[src] != dst:
                        ok = False
                        break
                else:
                    phi[src] = dst
                    todo.append(src)
        if ok and len(set(phi.values())) == n:
            g = Perm([phi[k] for k in range(1, n + 1)]).inverse()
            if all(x.conjugate_by(g) == y for x, y in zip(t1, t2)):
                return g
    return None


@dataclass(frozen=True)
class TowerReport:
    galois_closure: CoverReport
    base_curve: CoverReport
    quotients: tuple[CoverReport, ...]
    quotients_isomorphic: bool
    fiber: FiberProduct
    class_count: int
    torsion_count: int
    inferred_d: Fraction
    consistent: bool

    @property
    def genus_triple(self) -> tuple[int, int, int]:
        """Genera of the Galois closure, the degree-2 base curve and the first quotient."""
        return (self.galois_closure.genus, self.base_curve.genus, self.quotients[0].genus)


@lru_cache(maxsize=None)
def _class_count(p: int, b: int) -> int:
    return classify_coverings(BranchData(p, b)).class_count


def tower_report(t: MonodromyTuple, class_count: int | None = None) -> TowerReport:
    """Every cover in the square over the line built from one tuple.

    Coset quotients by the trivial group, the rotation subgroup and each
    reflection give the Galois closure, the degree-2 curve and the ``p``
    degree-``p`` quotients. The number of cyclic order-``p`` subgroups of the
    ``p``-torsion of the degree-2 curve is compared with the class count to
    infer how many étale covers sit over one class.
    """
    D = t.ambient
    p = D.prime
    ident = PermGroup([Perm.identity(p)])
    closure = coset_action_cover(t, ident)
    base = coset_action_cover(t, generate([D.rotation]))
    quotient_tuples = [coset_action(t, generate([r])) for r in D.reflections]
    quotients = tuple(cover_report(q) for q in quotient_tuples)
    iso = all(tuple_isomorphism(quotient_tuples[0], q) is not None for q in quotient_tuples)
    fiber = fiber_product(hyperelliptic_tuple(len(t.perms)), t.perms)
    if class_count is None:
        class_count = _class_count(p, len(t.perms))
    g = base.genus
    torsion = (p ** (2 * g) - 1) // (p - 1)
    d = Fraction(torsion, class_count) if class_count else Fraction(0)
    return TowerReport(
        galois_closure=closure,
        base_curve=base,
        quotients=quotients,
        quotients_isomorphic=iso,
        fiber=fiber,
        class_count=class_count,
        torsion_count=torsion,
        inferred_d=d,
        consistent=d == 1,
    )


def classification_record(p: int, b: int, threads: int = 1, budget: int = DEFAULT_BUDGET,
                          allow_conjectural: bool = False) -> dict[str, object]:
    """Report record for one ``(p, b)`` run.

    Over budget, only the character-formula total and the division
    ``(p^(b-1) - p) / (p (p - 1))`` are reported, labelled conjectural.
    """
    bd = BranchData(p, b)
    frob = frobenius_tuple_count(p, b)
    if bd.total_codes > budget:
        if not allow_conjectural:
            raise BudgetExceeded(f"{bd.total_codes} tuples exceed the enumeration budget "
                                 f"{budget}; pass --allow-conjectural for the formula count")
        n_order = p * (p - 1)
        connected = bd.total_codes - p
        return {
            "p": p,
            "b": b,
            "mode": "conjectural count - free action unverified",
            "total_tuples": frob,
            "connected_tuples": connected,
            "class_count": Fraction(connected, n_order),
            "frobenius_count": frob,
        }
    cls = classify_coverings(bd, threads=threads, budget=budget)
    space = cover_space(p)
    return {
        "p": p,
        "b": b,
        "mode": "exact",
        "total_tuples": cls.total_tuples,
        "connected_tuples": cls.connected_tuples,
        "class_count": cls.class_count,
        "orbit_size_histogram": cls.orbit_size_histogram,
        "normalizer_order": cls.normalizer_order,
        "burnside_count": burnside_count(bd),
        "frobenius_count": frob,
        "representatives": [
            [space.reflections[i].compact() for i in rep] for rep in cls.representatives
        ],
    }
