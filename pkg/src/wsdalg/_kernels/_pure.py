"""Pure-Python hot kernels over sparse Gaussian-integer vectors.

A vector is a ``dict`` from an integer key to a pair ``(re, im)`` of Python
ints; zero entries are never stored. Matrices are vectors keyed by
``row * n + col``. Keys below zero are bookkeeping slots: they ride along
through elimination but never become pivots.

``_fast.pyx`` mirrors every function here and must return identical results.
"""

from math import gcd

BACKEND = "python"


def matmul(a, b, n):
    """Product of two sparse ``n x n`` Gaussian-integer matrices."""
    acol = {}
    for key, (ar, ai) in a.items():
        r, k = divmod(key, n)
        acol.setdefault(k, []).append((r * n, ar, ai))
    out_re = {}
    out_im = {}
    for key, (br, bi) in b.items():
        k, c = divmod(key, n)
        col = acol.get(k)
        if col is None:
            continue
        for rn, ar, ai in col:
            o = rn + c
            out_re[o] = out_re.get(o, 0) + ar * br - ai * bi
            out_im[o] = out_im.get(o, 0) + ar * bi + ai * br
    out = {}
    for o, re in out_re.items():
        im = out_im[o]
        if re or im:
            out[o] = (re, im)
    return out


def lincomb(a, sa, b, sb):
    """``sa * a + sb * b`` for Gaussian-integer scalars ``sa``, ``sb``."""
    sar, sai = sa
    sbr, sbi = sb
    out = {}
    for key, (x, y) in a.items():
        out[key] = (sar * x - sai * y, sar * y + sai * x)
    for key, (x, y) in b.items():
        re = sbr * x - sbi * y
        im = sbr * y + sbi * x
        prev = out.get(key)
        if prev is not None:
            re += prev[0]
            im += prev[1]
        out[key] = (re, im)
    return {k: v for k, v in out.items() if v[0] or v[1]}


def content(vec):
    """gcd of all real and imaginary parts (0 for the empty vector)."""
    g = 0
    for re, im in vec.values():
        g = gcd(g, re, im)
        if g == 1:
            return 1
    return g


def divide(vec, g):
    return {k: (re // g, im // g) for k, (re, im) in vec.items()}


def primitive(vec):
    g = content(vec)
    if g > 1:
        return divide(vec, g)
    return vec


def pivot(vec):
    """Smallest non-negative key, or ``None`` when the main part is zero."""
    best = None
    for k in vec:
        if k >= 0 and (best is None or k < best):
            best = k
    return best


def reduce(vec, rows):
    """Fraction-free forward reduction of ``vec`` against echelon ``rows``.

    ``rows`` is a list of ``(pivot, row)`` sorted by pivot, where ``pivot`` is
    the smallest non-negative key of ``row``. The result is primitive and has
    no entry at any row pivot.
    """
    for p, row in rows:
        b = vec.get(p)
        if b is None:
            continue
        a = row[p]
        vec = primitive(lincomb(vec, a, row, (-b[0], -b[1])))
    return vec
