# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; see ``_kernels_py`` for the reference versions."""

from libc.stdlib cimport malloc, free


cdef int* _to_c(list values) except NULL:
    cdef Py_ssize_t n = len(values), i
    cdef int* buf = <int*> malloc((n if n > 0 else 1) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        buf[i] = values[i]
    return buf


def scan_orbits(int p, int nfree, long long lo, long long hi, list mul, list inv,
                list act):
    cdef int m = 2 * p
    cdef int b = nfree + 1
    cdef int nact = len(act)
    cdef int* cmul = _to_c(mul)
    cdef int* cinv = NULL
    cdef int* cact = NULL
    cdef int* digits = NULL
    cdef int* tup = NULL
    cdef long long* rep_code = NULL
    cdef int* rep_stab = NULL
    cdef long long code, tmp, nrep = 0, bad = -1
    cdef int k, j, g, x, last, stab, minimal, constant, u, t
    cdef list flat = []
    out = []
    if lo >= hi:
        free(cmul)
        return out
    try:
        cinv = _to_c(inv)
        for row in act:
            flat.extend(row)
        cact = _to_c(flat)
        digits = <int*> malloc(b * sizeof(int))
        tup = <int*> malloc(b * sizeof(int))
        rep_code = <long long*> malloc((hi - lo) * sizeof(long long))
        rep_stab = <int*> malloc((hi - lo) * sizeof(int))
        if digits == NULL or tup == NULL or rep_code == NULL or rep_stab == NULL:
            raise MemoryError()
        tmp = lo
        for k in range(nfree - 1, -1, -1):
            digits[k] = tmp % p
            tmp //= p
        with nogil:
            code = lo
            while code < hi:
                x = digits[0]
                for k in range(1, nfree):
                    x = cmul[x * m + digits[k]]
                last = cinv[x]
                if last >= p:
                    bad = code
                    break
                constant = 1
                for k in range(nfree):
                    tup[k] = digits[k]
                    if digits[k] != digits[0]:
                        constant = 0
                tup[nfree] = last
                if last != digits[0]:
                    constant = 0
                if not constant:
                    stab = 0
                    minimal = 1
                    for g in range(nact):
                        for k in range(b):
                            t = tup[k]
                            u = cact[g * p + t]
                            if u != t:
                                if u < t:
                                    minimal = 0
                                break
                        else:
                            stab += 1
                        if not minimal:
                            break
                    if minimal:
                        rep_code[nrep] = code
                        rep_stab[nrep] = stab
                        nrep += 1
                k = nfree - 1
                while k >= 0:
                    digits[k] += 1
                    if digits[k] < p:
                        break
                    digits[k] = 0
                    k -= 1
                code += 1
        if bad >= 0:
            raise RuntimeError(f"forced last entry of code {bad} is not a reflection")
        for j in range(nrep):
            out.append((rep_code[j], rep_stab[j]))
        return out
    finally:
        free(cmul)
        free(cinv)
        free(cact)
        free(digits)
        free(tup)
        free(rep_code)
        free(rep_stab)


def count_product_one(int b, list mul, int m, int identity, list letters):
    cdef int nl = len(letters)
    cdef int* cmul
    cdef int* clet
    cdef int* idx
    cdef int* prefix
    cdef long long total = 0
    cdef int k, j
    if b == 0:
        return 1
    if nl == 0:
        return 0
    cmul = _to_c(mul)
    clet = _to_c(letters)
    idx = <int*> malloc(b * sizeof(int))
    prefix = <int*> malloc((b + 1) * sizeof(int))
    try:
        if idx == NULL or prefix == NULL:
            raise MemoryError()
        with nogil:
            prefix[0] = identity
            for k in range(b):
                idx[k] = 0
                prefix[k + 1] = cmul[prefix[k] * m + clet[0]]
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
                    break
                for j in range(k, b):
                    prefix[j + 1] = cmul[prefix[j] * m + clet[idx[j]]]
        return total
    finally:
        free(cmul)
        free(clet)
        free(idx)
        free(prefix)
