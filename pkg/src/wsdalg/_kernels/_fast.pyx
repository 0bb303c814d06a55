# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_pure.py``.

Same data layout and same results. When every input component is below
``SMALL`` in absolute value the inner loops run on C ``long long``; sums of at
most 64 products of such values cannot overflow. Otherwise the loops fall
back to Python integer arithmetic.
"""

from math import gcd

BACKEND = "cython"

cdef long long SMALL = 1 << 28


cdef bint _small(dict vec):
    cdef object re, im
    for re, im in vec.values():
        if not (-SMALL < re < SMALL and -SMALL < im < SMALL):
            return False
    return True


def matmul(dict a, dict b, long n):
    if n <= 64 and _small(a) and _small(b):
        return _matmul_small(a, b, n)
    cdef dict acol = {}
    cdef long key, r, k, c, o
    cdef object ar, ai, br, bi
    cdef list col
    cdef tuple t
    for key, (ar, ai) in a.items():
        r = key // n
        k = key - r * n
        col = acol.get(k)
        if col is None:
            col = []
            acol[k] = col
        col.append((r * n, ar, ai))
    cdef dict out_re = {}
    cdef dict out_im = {}
    for key, (br, bi) in b.items():
        k = key // n
        c = key - k * n
        col = acol.get(k)
        if col is None:
            continue
        for t in col:
            ar = t[1]
            ai = t[2]
            o = <long>t[0] + c
            out_re[o] = out_re.get(o, 0) + ar * br - ai * bi
            out_im[o] = out_im.get(o, 0) + ar * bi + ai * br
    cdef dict out = {}
    cdef object re, im
    for o, re in out_re.items():
        im = out_im[o]
        if re or im:
            out[o] = (re, im)
    return out


cdef dict _matmul_small(dict a, dict b, long n):
    # column-grouped copy of ``a`` in flat C arrays
    cdef long long a_re[4096]
    cdef long long a_im[4096]
    cdef int a_row[4096]
    cdef int col_start[65]
    cdef int col_fill[64]
    cdef long long acc_re[4096]
    cdef long long acc_im[4096]
    cdef char touched[4096]
    cdef int touched_list[4096]
    cdef int n_touched = 0
    cdef int i, k, c, r, o, key, idx
    cdef long long br, bi, ar, ai
    cdef object x, y
    for i in range(n + 1):
        col_start[i] = 0
    for key in a:
        col_start[key % n + 1] += 1
    for i in range(n):
        col_start[i + 1] += col_start[i]
        col_fill[i] = col_start[i]
    for key, (x, y) in a.items():
        k = key % n
        idx = col_fill[k]
        col_fill[k] += 1
        a_row[idx] = key // n
        a_re[idx] = x
        a_im[idx] = y
    for i in range(n * n):
        touched[i] = 0
    for key, (x, y) in b.items():
        k = key // n
        c = key - k * n
        br = x
        bi = y
        for idx in range(col_start[k], col_start[k + 1]):
            ar = a_re[idx]
            ai = a_im[idx]
            o = a_row[idx] * n + c
            if not touched[o]:
                touched[o] = 1
                touched_list[n_touched] = o
                n_touched += 1
                acc_re[o] = 0
                acc_im[o] = 0
            acc_re[o] += ar * br - ai * bi
            acc_im[o] += ar * bi + ai * br
    cdef dict out = {}
    for i in range(n_touched):
        o = touched_list[i]
        if acc_re[o] != 0 or acc_im[o] != 0:
            out[o] = (acc_re[o], acc_im[o])
    return out


def lincomb(dict a, tuple sa, dict b, tuple sb):
    cdef object sar = sa[0], sai = sa[1], sbr = sb[0], sbi = sb[1]
    cdef object x, y, re, im
    cdef tuple prev
    cdef dict out = {}
    cdef long key
    for key, (x, y) in a.items():
        out[key] = (sar * x - sai * y, sar * y + sai * x)
    for key, (x, y) in b.items():
        re = sbr * x - sbi * y
        im = sbr * y + sbi * x
        prev = out.get(key)
        if prev is not None:
            re = re + prev[0]
            im = im + prev[1]
        out[key] = (re, im)
    return {k: v for k, v in out.items() if v[0] or v[1]}


def content(dict vec):
    cdef object g = 0
    cdef object re, im
    for re, im in vec.values():
        g = gcd(g, re, im)
        if g == 1:
            return 1
    return g


def divide(dict vec, object g):
    return {k: (re // g, im // g) for k, (re, im) in vec.items()}


def primitive(dict vec):
    cdef object g = content(vec)
    if g > 1:
        return divide(vec, g)
    return vec


def pivot(dict vec):
    cdef long k
    cdef long best = -1
    for k in vec:
        if k >= 0 and (best < 0 or k < best):
            best = k
    return None if best < 0 else best


def reduce(dict vec, list rows):
    cdef tuple entry, a, b
    cdef long p
    cdef dict row
    for entry in rows:
        p = entry[0]
        row = entry[1]
        b = vec.get(p)
        if b is None:
            continue
        a = row[p]
        vec = primitive(lincomb(vec, a, row, (-b[0], -b[1])))
    return vec
