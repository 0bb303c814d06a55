import random
from math import comb

import pytest

from wsdalg.canon_ops import GENERATOR_NAMES, build_J, get_operator
from wsdalg.lie.span import OperatorSpan
from wsdalg.reptheory import (
    Matrix6,
    NotInvariant,
    VectorOf,
    _parse_matrix_blocks,
    golden_matrices,
    isotypical_table,
    restrict,
    restriction_kernel,
    v_subspace,
    verify_generator_matrices,
    weight_space,
    w_monomials,
)
from wsdalg.scalars import GaussianRational, parse_scalar
from wsdalg.verify import generated_algebra


def test_isotypical_rows():
    t = isotypical_table()
    assert t.rows[3] == {-3: 1, -1: 9, 1: 9, 3: 1}
    assert t.rows[0] == {0: 1}
    assert t.rows[2] == {-2: 3, 0: 9, 2: 3}
    for k in range(7):
        assert sum(t.rows[k].values()) == comb(6, k)
        assert t.rows[k] == {-n: c for n, c in t.rows[k].items()}


def test_isotypical_matches_pq_counts():
    want = {}
    for p in range(4):
        for q in range(4):
            row = want.setdefault(p + q, {})
            row[q - p] = row.get(q - p, 0) + comb(3, p) * comb(3, q)
    assert isotypical_table().rows == want


def test_w_monomials_are_eigenvectors():
    J = build_J()
    mons = w_monomials()
    assert len(mons) == 64
    for mon in mons:
        v = mon.value
        assert J(v) == v.scale(GaussianRational(0, mon.weight))


def test_V_basis():
    V = v_subspace()
    assert V.dim == 6
    J = build_J()
    for b in V.basis:
        assert J(b) == b.scale(GaussianRational(0, -2))
    assert restrict(J) == Matrix6.identity().scale(GaussianRational(0, -2))
    assert restrict(J).trace() == GaussianRational(0, -12)


def test_golden_examples():
    g = golden_matrices()
    assert set(g) == set(GENERATOR_NAMES)
    assert g["V2"][6, 1] == parse_scalar("1/2*i")
    assert g["Lam2"][2, 4] == g["Lam2"][3, 5] == GaussianRational(2)
    assert g["L0"].nonzero() == {(5, 1): parse_scalar("-1/2"), (6, 2): parse_scalar("-1/2")}


def test_restrict_examples():
    assert restrict(get_operator("A1"))[2, 5] == parse_scalar("2*i")
    assert all(c.passed for c in verify_generator_matrices())


def test_mismatch_reports_first_difference():
    g = dict(golden_matrices())
    bad = g["L0"] + Matrix6.unit(1, 1)
    assert restrict(get_operator("L0")).first_difference(bad)[:2] == (1, 1)


def test_not_invariant():
    with pytest.raises(NotInvariant) as err:
        restrict(get_operator("E10"))
    assert err.value.column == 1


def test_parse_matrix_blocks():
    text = "# c\n[X]\n" + "\n".join(" ".join("1" if r == c else "0" for c in range(6)) for r in range(6))
    assert _parse_matrix_blocks(text)["X"] == Matrix6.identity()


def test_kernel_and_image():
    k = restriction_kernel(generated_algebra())
    assert (k.dim_algebra, k.image_rank, k.kernel_dim, k.traceless) == (35, 35, 0, True)
    empty = restriction_kernel(OperatorSpan([get_operator("J") - get_operator("J")]))
    assert empty.kernel_dim == 0


def test_restriction_is_a_homomorphism():
    basis = generated_algebra().basis
    rng = random.Random(7)
    for _ in range(20):
        a, b = rng.choice(basis), rng.choice(basis)
        assert restrict(a.bracket(b)) == restrict(a).bracket(restrict(b))


def test_closure_preserves_every_weight_space():
    spaces = {n: weight_space(n) for n in range(-3, 4)}
    for t in generated_algebra().basis:
        for n, sp in spaces.items():
            for v in sp.basis:
                assert VectorOf(t.apply(v.mv)) in sp, (t.name, n)
