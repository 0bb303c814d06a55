import pytest
from hypothesis import given, settings, strategies as st

from wsdalg import _kernels
from wsdalg._kernels import _pure, available_backends

BACKENDS = available_backends()
ids = [b.BACKEND for b in BACKENDS]

small = st.integers(-9, 9)
big = st.integers(-(2**70), 2**70)
entry = st.tuples(small, small).filter(any)
big_entry = st.tuples(big, big).filter(any)


def sparse(n, values=entry, size=12):
    return st.dictionaries(st.integers(0, n * n - 1), values, max_size=size)


def test_selected_backend_is_available():
    assert _kernels.BACKEND in ids


@pytest.mark.parametrize("mod", BACKENDS, ids=ids)
@given(a=sparse(8), b=sparse(8))
def test_matmul_matches_pure(mod, a, b):
    assert mod.matmul(a, b, 8) == _pure.matmul(a, b, 8)


@pytest.mark.parametrize("mod", BACKENDS, ids=ids)
@given(a=sparse(64, big_entry, 6), b=sparse(64, big_entry, 6))
@settings(max_examples=40)
def test_matmul_bigint_fallback(mod, a, b):
    assert mod.matmul(a, b, 64) == _pure.matmul(a, b, 64)


@pytest.mark.parametrize("mod", BACKENDS, ids=ids)
@given(a=sparse(6), b=sparse(6), sa=entry, sb=entry)
def test_lincomb_content_primitive(mod, a, b, sa, sb):
    assert mod.lincomb(a, sa, b, sb) == _pure.lincomb(a, sa, b, sb)
    assert mod.content(a) == _pure.content(a)
    assert mod.primitive(a) == _pure.primitive(a)
    assert mod.pivot(a) == _pure.pivot(a)


@pytest.mark.parametrize("mod", BACKENDS, ids=ids)
@given(vecs=st.lists(sparse(5, size=6), max_size=6))
@settings(max_examples=60)
def test_reduce_matches_pure(mod, vecs):
    rows_m, rows_p = [], []
    for v in vecs:
        rm = mod.reduce(dict(v), rows_m)
        rp = _pure.reduce(dict(v), rows_p)
        assert rm == rp
        p = _pure.pivot(rp)
        if p is not None:
            rows_m.append((p, rm))
            rows_p.append((p, rp))
            rows_m.sort(key=lambda t: t[0])
            rows_p.sort(key=lambda t: t[0])
