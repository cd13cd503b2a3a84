"""Pure-Python versions of the enumeration kernels.

Same signatures and results as the compiled ``_kernels`` module. Group
elements are small integers; reflections are ``0..p-1`` and the product of
elements ``x, y`` is ``mul[x * m + y]`` where ``m`` is the group order.
"""
from __future__ import annotations


def _digits(code: int, base: int, width: int) -> list[int]:
    out = [0] * width
    for k in range(width - 1, -1, -1):
        code, out[k] = divmod(code, base)
    return out


def scan_orbits(p: int, nfree: int, lo: int, hi: int, mul: list[int], inv: list[int],
                act: list[list[int]]) -> list[tuple[int, int]]:
    """Orbit representatives among connected tuples with codes in ``[lo, hi)``.

    A code is the base-``p`` string of the first ``nfree`` reflection indices;
    the last entry is forced by the product condition. ``act`` lists the
    acting group as permutations of reflection indices. Returns
    ``(code, stabilizer_order)`` for every code that is lexicographically
    minimal in its orbit.
    """
    m = 2 * p
    out = []
    if lo >= hi:
        return out
    digits = _digits(lo, p, nfree)
    tup = digits + [0]
    b = nfree + 1
    for code in range(lo, hi):
        x = digits[0]
        for d in digits[1:]:
            x = mul[x * m + d]
        last = inv[x]
        if last >= p:
            raise RuntimeError(f"forced last entry of code {code} is not a reflection")
        tup[:nfree] = digits
        tup[nfree] = last
        first = tup[0]
        if any(t != first for t in tup):
            stab = 0
            minimal = True
            for perm in act:
                for t in tup:
                    u = perm[t]
                    if u != t:
                        if u < t:
                            minimal = False
                        break
                else:
                    stab += 1
                    continue
                if not minimal:
                    break
            if minimal:
                out.append((code, stab))
        k = nfree - 1
        while k >= 0:
            digits[k] += 1
            if digits[k] < p:
                break
            digits[k] = 0
            k -= 1
    return out


def count_product_one(b: int, mul: list[int], m: int, identity: int,
                      letters: list[int]) -> int:
    """Number of length-``b`` words over ``letters`` whose product is ``identity``."""
    if b == 0:
        return 1
    nl = len(letters)
    if nl == 0:
        return 0
    idx = [0] * b
    prefix = [0] * (b + 1)
    prefix[0] = identity
    for k in range(b):
        prefix[k + 1] = mul[prefix[k] * m + letters[0]]
    total = 0
    while True:
        if prefix[b] == identity:
            total += 1
        k = b - 1
        while k >= 0:
            idx[k] += 1
            if idx[k] < nl:
                break
            idx[k] = 0
            k -= 1
        if k < 0:
            return total
        for j in range(k, b):
            prefix[j + 1] = mul[prefix[j] * m + letters[idx[j]]]
