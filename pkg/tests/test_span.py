import pytest

from wsdalg.canon_ops import build_J, generators, get_operator
from wsdalg.lie.operator import Operator, lincomb
from wsdalg.lie.span import (
    ClosureNotReached,
    OperatorSpan,
    default_max_rounds,
    in_span,
    rank,
    same_span,
    span_closure,
)
from wsdalg.scalars import GaussianRational, I
from wsdalg.verify import generated_algebra


def test_membership_coefficients_reconstruct():
    ops = [get_operator(n) for n in ("L0", "V1", "Lam2")]
    span = OperatorSpan(ops)
    target = lincomb([(GaussianRational(1, 2), ops[0]), (I, ops[1]), (-3, ops[2])])
    mem = span.contains(target)
    assert mem.member
    assert span.combination(mem.coefficients) == target


def test_non_member_has_residual():
    span = OperatorSpan([get_operator("L0")])
    mem = in_span(get_operator("V0"), span)
    assert not mem.member
    assert mem.residual


def test_zero_is_member_with_zero_coefficients():
    span = OperatorSpan([get_operator("L0"), get_operator("A2")])
    mem = span.contains(Operator.zero())
    assert mem.member and all(c == 0 for c in mem.coefficients)


def test_rank_ignores_dependencies():
    a, b = get_operator("L0"), get_operator("L1")
    assert rank([a, b, a + b, a.scale(I)]) == 2


@pytest.mark.parametrize("names, dim", [(("L0", "Lam0"), 3), (("J",), 1), (("V2", "A2"), 3)])
def test_small_closures(names, dim):
    assert span_closure([get_operator(n) for n in names]).dim == dim


def test_full_closure():
    L = generated_algebra()
    assert L.dim == 35
    assert get_operator("H0") in L
    assert build_J() not in L


def test_closure_is_star_closed_and_traceless():
    L = generated_algebra()
    for t in L.basis:
        assert t.adjoint() in L
        assert t.trace() == 0


def test_closure_is_deterministic():
    a = span_closure(generators())
    b = span_closure(generators())
    assert a.pivots == b.pivots
    assert [t.flat for t in a.basis] == [t.flat for t in b.basis]


def test_round_cap(monkeypatch):
    with pytest.raises(ClosureNotReached):
        span_closure(generators(), max_rounds=1)
    monkeypatch.setenv("WSDALG_MAX_ROUNDS", "2")
    assert default_max_rounds() == 2
    with pytest.raises(ClosureNotReached):
        span_closure(generators())
    monkeypatch.delenv("WSDALG_MAX_ROUNDS")
    assert default_max_rounds() == 12


def test_same_span_needs_both_directions():
    a = OperatorSpan([get_operator("L0")])
    b = OperatorSpan([get_operator("L0"), get_operator("L1")])
    assert not same_span(a, b)
    assert same_span(b, OperatorSpan([get_operator("L0") + get_operator("L1"), get_operator("L1")]))
