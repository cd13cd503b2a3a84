"""Dihedral subgroups of the symmetric group of prime degree.

A dihedral group of order ``2p`` inside ``S_p`` is generated by two
involutions whose product is a ``p``-cycle. The representative used
throughout the package is ``<a, b>`` with

    a = (1 2)(3 4) ... (p-2 p-1),   b = (2 3)(4 5) ... (p-1 p),

so that for ``p = 7`` we get ``a = (12)(34)(56)``, ``b = (23)(45)(67)`` and
``a * b = (1357642)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .perm import Perm, PermGroup, are_conjugate, generate, symmetric_group

__all__ = [
    "DihedralSubgroup",
    "PairClass",
    "ProfileViolation",
    "CandidateRow",
    "is_odd_prime",
    "standard_pair",
    "standard_dihedral",
    "involution_pair_class",
    "fixed_point_profile",
    "candidate_table",
    "enumerate_dihedral_subgroups",
]


class ProfileViolation(RuntimeError):
    """A point is fixed by zero or by several reflections."""


def is_odd_prime(p: int) -> bool:
    return p > 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


@dataclass(frozen=True)
class DihedralSubgroup:
    group: PermGroup
    rotation: Perm
    reflections: tuple[Perm, ...]
    prime: int

    @classmethod
    def from_pair(cls, x: Perm, y: Perm) -> DihedralSubgroup:
        """Build from involutions whose product is a ``p``-cycle (not re-checked)."""
        s = x * y
        p = s.degree
        group = generate([x, y])
        reflections = tuple(sorted((g for g in group if g.order == 2),
                                   key=lambda r: r.fixed_points()))
        return cls(group, s, reflections, p)

    def rotations(self) -> tuple[Perm, ...]:
        return tuple(self.rotation ** k for k in range(self.prime))

    def reflection_fixing(self, point: int) -> Perm:
        return fixed_point_profile(self)[point]

    def conjugate(self, g: Perm) -> DihedralSubgroup:
        refl = tuple(sorted((r.conjugate_by(g) for r in self.reflections),
                            key=lambda r: r.fixed_points()))
        return DihedralSubgroup(self.group.conjugate(g), self.rotation.conjugate_by(g),
                                refl, self.prime)


def standard_pair(p: int = 7) -> tuple[Perm, Perm]:
    if not is_odd_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    a = Perm.from_cycles([(i, i + 1) for i in range(1, p - 1, 2)], p)
    b = Perm.from_cycles([(i, i + 1) for i in range(2, p, 2)], p)
    return a, b


def standard_dihedral(p: int = 7) -> DihedralSubgroup:
    return DihedralSubgroup.from_pair(*standard_pair(p))


@dataclass(frozen=True)
class PairClass:
    dihedral: bool
    reason: str | None
    product_order: int
    subgroup: DihedralSubgroup | None = None

    def __str__(self) -> str:
        return "dihedral" if self.dihedral else f"not-dihedral ({self.reason})"


def involution_pair_class(x: Perm, y: Perm) -> PairClass:
    """Decide whether ``<x, y>`` is dihedral of order ``2p``.

    Reasons for a negative answer are ``"not-involution"`` or
    ``"product-order-k"``; nothing else is reported.
    """
    p = x.degree
    if not is_odd_prime(p):
        raise ValueError(f"degree {p} is not an odd prime")
    s = x * y
    if x.order != 2 or y.order != 2:
        return PairClass(False, "not-involution", s.order)
    if s.order != p:
        return PairClass(False, f"product-order-{s.order}", s.order)
    if x * s * x != s.inverse():
        raise AssertionError("x s x != s^-1 for involutions with p-cycle product")
    return PairClass(True, None, p, DihedralSubgroup.from_pair(x, y))


def fixed_point_profile(D: DihedralSubgroup) -> dict[int, Perm]:
    """Map each point to the unique reflection fixing it."""
    profile: dict[int, Perm] = {}
    for r in D.reflections:
        for pt in r.fixed_points():
            if pt in profile:
                raise ProfileViolation(f"point {pt} fixed by {profile[pt]} and {r}")
            profile[pt] = r
    missing = set(range(1, D.prime + 1)) - profile.keys()
    if missing or len(D.reflections) != D.prime:
        raise ProfileViolation(f"points without a fixing reflection: {sorted(missing)}")
    return dict(sorted(profile.items()))


def _matchings(points: tuple[int, ...]) -> Iterator[list[tuple[int, int]]]:
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for k, partner in enumerate(rest):
        remaining = rest[:k] + rest[k + 1:]
        for m in _matchings(remaining):
            yield [(first, partner)] + m


@dataclass(frozen=True)
class CandidateRow:
    index: int
    b: Perm
    s: Perm
    dihedral: bool
    reason: str | None


def candidate_table(p: int = 7) -> list[CandidateRow]:
    """Involutions ``b`` fixing 1 paired with the standard ``a``.

    ``b`` runs over perfect matchings of ``{2..p}`` in lexicographic order,
    skipping those containing ``(2 p)``: with ``a`` fixing ``p`` such a ``b``
    makes ``(1 p 2)`` a cycle of ``a * b``. For ``p = 7`` this leaves twelve rows.
    """
    a, _ = standard_pair(p)
    rows = []
    for m in _matchings(tuple(range(2, p + 1))):
        if (2, p) in m:
            continue
        b = Perm.from_cycles(m, p)
        cls = involution_pair_class(a, b)
        rows.append(CandidateRow(len(rows) + 1, b, a * b, cls.dihedral, cls.reason))
    return rows


def _subgroups_from_pairs(p: int) -> list[DihedralSubgroup]:
    shape = (2,) * ((p - 1) // 2) + (1,)
    invs = [g for g in symmetric_group(p) if g.cycle_type() == shape]
    seen: set[frozenset[Perm]] = set()
    out = []
    for x, y in itertools.product(invs, repeat=2):
        s = x * y
        if s.order != p:
            continue
        key = frozenset(s ** k for k in range(p))
        if key in seen:
            continue
        seen.add(key)
        out.append(DihedralSubgroup.from_pair(x, y))
    return out


def _subgroups_from_cycles(p: int) -> list[DihedralSubgroup]:
    # one dihedral group per cyclic subgroup of order p; its generator taking 1 to 2
    # is the p-cycle (1 2 x_2 ... x_{p-1})
    a, b = standard_pair(p)
    ref = DihedralSubgroup.from_pair(a, b)
    out = []
    for tail in itertools.permutations(range(3, p + 1)):
        cyc = (1, 2) + tail
        # g maps the reference rotation's cycle onto cyc
        ref_cycle = ref.rotation.cycles()[0]
        img = [0] * p
        for u, v in zip(ref_cycle, cyc):
            img[u - 1] = v
        relabel = Perm(img)
        out.append(ref.conjugate(relabel.inverse()))
    return out


@dataclass(frozen=True)
class DihedralEnumeration:
    prime: int
    representative: DihedralSubgroup
    subgroups: tuple[DihedralSubgroup, ...]
    witnesses: tuple[Perm, ...]
    method: str

    @property
    def count(self) -> int:
        return len(self.subgroups)


def enumerate_dihedral_subgroups(p: int = 7, method: str = "auto",
                                 witness_method: str = "auto") -> DihedralEnumeration:
    """All dihedral subgroups of order ``2p`` in ``S_p`` with conjugating witnesses.

    ``method="pairs"`` scans every ordered pair of involutions of type
    ``(2, ..., 2, 1)`` (feasible up to ``p = 7``); ``method="cycles"`` builds one
    group per ``p``-cycle subgroup. Each witness ``g`` satisfies
    ``g <a, b> g^-1 = D`` and is verified before it is returned.
    """
    if not is_odd_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if method == "auto":
        method = "pairs" if p <= 7 else "cycles"
    if method == "pairs":
        if p > 7:
            raise ValueError("pair scan is limited to p <= 7")
        subs = _subgroups_from_pairs(p)
    elif method == "cycles":
        if p > 11:
            raise ValueError("exhaustive enumeration is limited to p <= 11")
        subs = _subgroups_from_cycles(p)
    else:
        raise ValueError(f"unknown method {method!r}")
    subs.sort(key=lambda d: d.group.elements)
    rep = standard_dihedral(p)
    if witness_method == "auto":
        witness_method = "brute" if p <= 7 else "backtrack"
    ambient = symmetric_group(p) if witness_method == "brute" else None
    witnesses = []
    for d in subs:
        g = are_conjugate(rep.group, d.group, ambient, method=witness_method)
        if g is None:
            raise AssertionError(f"no conjugating element found for {d.group}")
        witnesses.append(g)
    return DihedralEnumeration(p, rep, tuple(subs), tuple(witnesses), method)
