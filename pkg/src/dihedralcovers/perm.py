"""Exact permutations and small permutation groups.

Points are 1-based. Products are read left to right (right action):
``(p * q)(i) == q(p(i))``. With this convention ``(12)(34)(56) * (23)(45)(67)``
is the 7-cycle ``(1357642)``; the opposite convention gives a different
element and silently changes every count built on top of it.
"""
from __future__ import annotations

import itertools
import math
import re
from collections import deque
from functools import cached_property
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Perm",
    "PermGroup",
    "CycleSyntaxError",
    "DegreeMismatch",
    "parse_cycles",
    "compose",
    "generate",
    "symmetric_group",
    "is_transitive",
    "normalizer",
    "are_conjugate",
    "is_sharply_two_transitive",
]

MAX_DEGREE = 31


class CycleSyntaxError(ValueError):
    pass


class DegreeMismatch(ValueError):
    pass


class Perm:
    """A bijection of ``{1, ..., n}`` stored as its image sequence."""

    __slots__ = ("_img", "__dict__")

    def __init__(self, images: Sequence[int]):
        n = len(images)
        if n < 1:
            raise ValueError("degree must be positive")
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {tuple(images)}")
        self._img = tuple(i - 1 for i in images)

    @classmethod
    def _from_zero_based(cls, img: tuple[int, ...]) -> Perm:
        p = cls.__new__(cls)
        p._img = img
        return p

    @classmethod
    def identity(cls, n: int) -> Perm:
        return cls._from_zero_based(tuple(range(n)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> Perm:
        img = list(range(n))
        seen: set[int] = set()
        for cyc in cycles:
            for x in cyc:
                if not 1 <= x <= n:
                    raise CycleSyntaxError(f"point {x} outside 1..{n}")
                if x in seen:
                    raise CycleSyntaxError(f"point {x} repeated")
                seen.add(x)
            for i, x in enumerate(cyc):
                img[x - 1] = cyc[(i + 1) % len(cyc)] - 1
        return cls._from_zero_based(tuple(img))

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple[int, ...]:
        """1-based image sequence."""
        return tuple(i + 1 for i in self._img)

    def __call__(self, i: int) -> int:
        return self._img[i - 1] + 1

    def __mul__(self, other: Perm) -> Perm:
        if not isinstance(other, Perm):
            return NotImplemented
        if other.degree != self.degree:
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree}")
        q = other._img
        return Perm._from_zero_based(tuple(q[i] for i in self._img))

    def __pow__(self, k: int) -> Perm:
        base = self if k >= 0 else self.inverse()
        k = abs(k) % self.order
        out = Perm.identity(self.degree)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> Perm:
        inv = [0] * self.degree
        for i, j in enumerate(self._img):
            inv[j] = i
        return Perm._from_zero_based(tuple(inv))

    def conjugate_by(self, g: Perm) -> Perm:
        """``g * self * g**-1`` in the left-to-right product."""
        return g * self * g.inverse()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Perm) and self._img == other._img

    def __lt__(self, other: Perm) -> bool:
        return self._img < other._img

    def __hash__(self) -> int:
        return hash(self._img)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self._img))

    def fixed_points(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, j in enumerate(self._img) if i == j)

    @cached_property
    def _cycles(self) -> tuple[tuple[int, ...], ...]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i + 1)
                i = self._img[i]
            out.append(tuple(cyc))
        return tuple(out)

    def cycles(self, include_fixed: bool = False) -> tuple[tuple[int, ...], ...]:
        """Cycles starting at their smallest point, sorted by that point."""
        if include_fixed:
            return self._cycles
        return tuple(c for c in self._cycles if len(c) > 1)

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self._cycles), reverse=True))

    def sign(self) -> int:
        return -1 if (self.degree - len(self._cycles)) % 2 else 1

    @cached_property
    def order(self) -> int:
        return math.lcm(*(len(c) for c in self._cycles))

    def is_involution(self) -> bool:
        return self.order == 2

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)

    def compact(self) -> str:
        """Juxtaposed-digit cycle notation, as used in printed tables."""
        if self.degree > 9:
            return str(self)
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + "".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"<Perm {self} degree={self.degree}>"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int = 7) -> Perm:
    """Parse cycle notation such as ``"(12)(34)(56)"`` or ``"(1,10)(2,3)"``.

    Digits may be juxtaposed only when ``degree <= 9``.
    """
    if not 1 <= degree <= MAX_DEGREE:
        raise CycleSyntaxError(f"unsupported degree {degree}")
    s = "".join(text.split())
    if not s:
        raise CycleSyntaxError("empty string; use '()' for the identity")
    pos = 0
    cycles = []
    for m in _CYCLE_RE.finditer(s):
        if m.start() != pos:
            raise CycleSyntaxError(f"malformed parenthesization in {text!r}")
        pos = m.end()
        body = m.group(1)
        if not body:
            continue
        if "," in body:
            parts = body.split(",")
            if any(not q.isdigit() for q in parts):
                raise CycleSyntaxError(f"bad cycle {body!r}")
            pts = [int(q) for q in parts]
        else:
            if not body.isdigit():
                raise CycleSyntaxError(f"bad cycle {body!r}")
            if degree > 9 and len(body) > 1:
                raise CycleSyntaxError("juxtaposed digits need degree <= 9; use commas")
            pts = [int(c) for c in body]
        cycles.append(pts)
    if pos != len(s):
        raise CycleSyntaxError(f"malformed parenthesization in {text!r}")
    return Perm.from_cycles(cycles, degree)


def compose(p: Perm, q: Perm) -> Perm:
    """Left-to-right product: apply ``p`` first, then ``q``."""
    return p * q


class PermGroup:
    """A finite permutation group held as its full, sorted element list."""

    def __init__(self, elements: Iterable[Perm], generators: Iterable[Perm] = (),
                 symmetric: bool = False):
        self.elements: tuple[Perm, ...] = tuple(sorted(set(elements)))
        if not self.elements:
            raise ValueError("a group has at least the identity")
        self.degree = self.elements[0].degree
        self.generators: tuple[Perm, ...] = tuple(generators) or self.elements
        self._set = frozenset(self.elements)
        self.is_symmetric = symmetric

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.elements)

    def __contains__(self, p: Perm) -> bool:
        return p in self._set

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PermGroup) and self._set == other._set

    def __hash__(self) -> int:
        return hash(self._set)

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators[:4])
        return f"<PermGroup degree={self.degree} order={self.order} gens=[{gens}]>"

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return self._set <= other._set

    def orbit(self, point: int) -> frozenset[int]:
        seen = {point}
        todo = [point]
        while todo:
            x = todo.pop()
            for g in self.generators:
                y = g(x)
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return frozenset(seen)

    def conjugate(self, g: Perm) -> PermGroup:
        return PermGroup((x.conjugate_by(g) for x in self.elements),
                         [x.conjugate_by(g) for x in self.generators])

    def is_closed(self) -> bool:
        """Exhaustive closure check under product and inverse."""
        if Perm.identity(self.degree) not in self:
            return False
        return all(x.inverse() in self and all(x * y in self for y in self.elements)
                   for x in self.elements)


def generate(gens: Iterable[Perm]) -> PermGroup:
    """Breadth-first closure of ``gens``."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].degree
    for g in gens:
        if g.degree != n:
            raise DegreeMismatch(f"degrees {n} and {g.degree}")
    ident = Perm.identity(n)
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x * g
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return PermGroup(seen, gens)


def symmetric_group(n: int) -> PermGroup:
    if n > 8:
        raise ValueError("explicit symmetric groups are limited to degree 8")
    elems = (Perm._from_zero_based(t) for t in itertools.permutations(range(n)))
    gens = [Perm.from_cycles([list(range(1, n + 1))], n)] if n > 1 else [Perm.identity(1)]
    if n > 2:
        gens.append(Perm.from_cycles([[1, 2]], n))
    return PermGroup(elems, gens, symmetric=True)


def is_transitive(G: PermGroup) -> bool:
    return len(G.orbit(1)) == G.degree


def _relabelings(G: PermGroup, H: PermGroup) -> Iterator[list[int]]:
    """Backtrack over relabelings ``phi`` (0-based lists) with ``phi G phi^-1 = H``.

    ``phi`` must carry each generator ``x`` of ``G`` to some ``y`` in ``H`` with
    ``y(phi(k)) = phi(x(k))``; candidate sets for ``y`` shrink as points are
    assigned, which prunes the search to a few branches for transitive groups.
    """
    n = G.degree
    gens = [x._img for x in G.generators]
    targets = [y._img for y in H.elements]
    order = []
    seen = set()
    for start in range(n):
        if start in seen:
            continue
        seen.add(start)
        queue = deque([start])
        while queue:
            k = queue.popleft()
            order.append(k)
            for x in gens:
                if x[k] not in seen:
                    seen.add(x[k])
                    queue.append(x[k])

    phi = [-1] * n
    used = [False] * n

    def consistent(cands: list[list[int]], k: int) -> list[list[int]] | None:
        out = []
        for x, cs in zip(gens, cands):
            pairs = []
            # constraints touching k: (k, x[k]) and (x^-1[k], k)
            for src in (k, x.index(k)):
                dst = x[src]
                if phi[src] >= 0 and phi[dst] >= 0:
                    pairs.append((phi[src], phi[dst]))
            if pairs:
                cs = [c for c in cs if all(targets[c][u] == v for u, v in pairs)]
                if not cs:
                    return None
            out.append(cs)
        return out

    start_cands = [list(range(len(targets))) for _ in gens]

    def rec(depth: int, cands: list[list[int]]) -> Iterator[list[int]]:
        if depth == n:
            yield list(phi)
            return
        k = order[depth]
        for v in range(n):
            if used[v]:
                continue
            phi[k] = v
            used[v] = True
            nxt = consistent(cands, k)
            if nxt is not None:
                yield from rec(depth + 1, nxt)
            phi[k] = -1
            used[v] = False

    yield from rec(0, start_cands)


def _witness_from_relabeling(phi: list[int]) -> Perm:
    # conjugate_by(g) maps i to g^-1(x(g(i))), so phi is g^-1
    return Perm._from_zero_based(tuple(phi)).inverse()


def _is_large_symmetric(ambient: PermGroup | None, n: int) -> bool:
    return ambient is None or ambient.is_symmetric


def _conjugates_into(G: PermGroup, H: PermGroup, g: Perm) -> bool:
    return all(x.conjugate_by(g) in H for x in G.generators)


def normalizer(G: PermGroup, ambient: PermGroup | None = None, method: str = "auto") -> PermGroup:
    """``{g in ambient : g G g^-1 = G}``.

    ``ambient=None`` stands for the full symmetric group of ``G.degree``, which
    then never gets materialised; the backtrack search is used instead.
    """
    if ambient is not None and not G.is_subgroup_of(ambient):
        raise ValueError("G is not a subgroup of the ambient group")
    if method == "auto":
        method = "brute" if ambient is not None and ambient.order <= 40320 else "backtrack"
    if method == "brute":
        if ambient is None:
            raise ValueError("brute force needs an explicit ambient group")
        elems = [g for g in ambient if _conjugates_into(G, G, g)]
    elif method == "backtrack":
        if not _is_large_symmetric(ambient, G.degree):
            raise ValueError("backtrack search assumes the full symmetric ambient group")
        elems = [_witness_from_relabeling(phi) for phi in _relabelings(G, G)]
    else:
        raise ValueError(f"unknown method {method!r}")
    return PermGroup(elems)


def are_conjugate(G: PermGroup, H: PermGroup, ambient: PermGroup | None = None,
                  method: str = "auto") -> Perm | None:
    """Return ``g`` with ``g G g^-1 = H``, or ``None``; the witness is verified."""
    if ambient is not None and not (G.is_subgroup_of(ambient) and H.is_subgroup_of(ambient)):
        raise ValueError("G and H must be subgroups of the ambient group")
    if G.order != H.order:
        return None
    if method == "auto":
        method = "brute" if ambient is not None and ambient.order <= 40320 else "backtrack"
    witness = None
    if method == "brute":
        if ambient is None:
            raise ValueError("brute force needs an explicit ambient group")
        witness = next((g for g in ambient if _conjugates_into(G, H, g)), None)
    elif method == "backtrack":
        if not _is_large_symmetric(ambient, G.degree):
            raise ValueError("backtrack search assumes the full symmetric ambient group")
        phi = next(_relabelings(G, H), None)
        witness = None if phi is None else _witness_from_relabeling(phi)
    else:
        raise ValueError(f"unknown method {method!r}")
    if witness is not None and G.conjugate(witness) != H:
        raise AssertionError(f"unverified conjugating element {witness}")
    return witness


def is_sharply_two_transitive(G: PermGroup) -> bool:
    n = G.degree
    hits: dict[tuple[int, int, int, int], int] = {}
    for g in G:
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i != j:
                    key = (i, j, g(i), g(j))
                    hits[key] = hits.get(key, 0) + 1
    return len(hits) == (n * (n - 1)) ** 2 and all(v == 1 for v in hits.values())
