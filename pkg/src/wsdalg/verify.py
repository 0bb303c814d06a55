"""The verification suites behind ``wsdalg verify``.

Each suite returns a VerificationReport. Expensive shared objects (the
generated algebra, the quadratic space) are cached for the process.
"""

from __future__ import annotations

import random
from functools import lru_cache
from math import comb

from . import cartan
from .canon_ops import (
    GENERATOR_NAMES,
    S3,
    E,
    I_op,
    build_J,
    build_J_derivation,
    build_J_formula,
    generators,
    get_operator,
    s3_conjugate,
)
from .lie.operator import Operator
from .lie.quadratic import closure66, j_invariant_quadratics, j_weight_split, quadratic_space
from .lie.span import OperatorSpan, VectorSpan, same_span, span_closure
from .report import VerificationReport
from .reptheory import (
    Matrix6,
    isotypical_table,
    restrict,
    restriction_kernel,
    v_subspace,
    verify_generator_matrices,
)
from .scalars import GaussianRational

__all__ = ["SUITES", "UnknownSuite", "run_suite", "run_all", "generated_algebra", "ISOTYPICAL_REFERENCE"]


class UnknownSuite(KeyError):
    pass


# degree -> {weight: multiplicity}, hand-transcribed reference values
ISOTYPICAL_REFERENCE = {
    0: {0: 1},
    1: {-1: 3, 1: 3},
    2: {-2: 3, 0: 9, 2: 3},
    3: {-3: 1, -1: 9, 1: 9, 3: 1},
    4: {-2: 3, 0: 9, 2: 3},
    5: {-1: 3, 1: 3},
    6: {0: 1},
}

MDEG_SAMPLES = 50
MDEG_SEED = 20240601


@lru_cache(maxsize=None)
def generated_algebra() -> OperatorSpan:
    return span_closure(generators())


def _nnz(t: Operator) -> str:
    return f"residual has {t.nnz} nonzero entries"


# -- suites -------------------------------------------------------------------

def suite_clifford() -> VerificationReport:
    rep = VerificationReport("clifford")
    names = [f"E{i}{j}" for i in (1, 2) for j in range(3)] + [f"I{i}{j}" for i in (1, 2) for j in range(3)]
    ops = {n: (E if n[0] == "E" else I_op)(int(n[1]), int(n[2])) for n in names}
    ident = Operator.identity()
    for a in names:
        for b in names:
            x, y = ops[a], ops[b]
            anti = x @ y + y @ x
            dual = {a[0], b[0]} == {"E", "I"} and a[1:] == b[1:]
            want = ident if dual else Operator.zero()
            rep.add(f"clifford/anticommutator/{a},{b}", "anticommutation relations",
                    anti == want, _nnz(anti - want))
    for i in (1, 2):
        for j in range(3):
            x, y = ops[f"E{i}{j}"], ops[f"I{i}{j}"]
            s = x @ y + y @ x
            rep.add(f"clifford/identity/E{i}{j}I{i}{j}+I{i}{j}E{i}{j}=Id", "anticommutation relations",
                    s == ident, _nnz(s - ident))
    jd, jf = build_J_derivation(), build_J_formula()
    rep.add("clifford/J/derivation=formula", "rotation generator J", jd == jf, _nnz(jd - jf))
    rep.add("clifford/J/skew-adjoint", "rotation generator J", jd.adjoint() == -jd,
            _nnz(jd.adjoint() + jd))
    return rep


def suite_s3() -> VerificationReport:
    rep = VerificationReport("s3")
    J = build_J()
    for s in S3:
        for fam, signed in (("V", False), ("A", False), ("L", True), ("Lam", True)):
            for j in range(3):
                got = s3_conjugate(s, get_operator(f"{fam}{j}"))
                want = get_operator(f"{fam}{s(j)}")
                if signed:
                    want = want.scale(s.sign)
                sign = "eps*" if signed else ""
                rep.add(f"s3/{s}/sigma({fam}{j})={sign}{fam}{s(j)}", "S3 symmetry of the generators",
                        got == want, _nnz(got - want))
        got = s3_conjugate(s, J)
        rep.add(f"s3/{s}/sigma(J)=J", "S3 symmetry of the generators", got == J, _nnz(got - J))
    return rep


def suite_so2() -> VerificationReport:
    rep = VerificationReport("so2")
    J = build_J()
    for name in GENERATOR_NAMES:
        c = J.bracket(get_operator(name))
        rep.add(f"so2/[J,{name}]=0", "generators commute with J", c.is_zero(), _nnz(c))
    table = isotypical_table(check=True)
    for k, want in ISOTYPICAL_REFERENCE.items():
        got = table.rows.get(k, {})
        rep.add(f"so2/isotypical/degree-{k}", "isotypical decomposition", got == want,
                f"computed {got}, expected {want}")
        total = sum(got.values())
        rep.add(f"so2/isotypical/degree-{k}/sum=C(6,{k})", "isotypical decomposition",
                total == comb(6, k), f"row sum {total}")
    V = v_subspace()
    rep.add("so2/V/dim=6", "weight -2 component V", V.dim == 6, f"dim {V.dim}")
    jv = restrict(J, V)
    want = Matrix6.identity().scale(GaussianRational(0, -2))
    rep.add("so2/V/J=-2i*Id", "weight -2 component V", jv == want, str(jv.first_difference(want)))
    return rep


def suite_sl6() -> VerificationReport:
    rep = VerificationReport("sl6")
    for mc in verify_generator_matrices():
        rep.add(f"sl6/matrix/{mc.name}", "restricted generator matrices", mc.passed, mc.witness)
    L = generated_algebra()
    rep.add("sl6/closure/dim=35", "closure dimension", L.dim == 35, f"dim {L.dim}")
    k = restriction_kernel(L)
    rep.add("sl6/restriction/kernel=0", "restriction to V is faithful", k.kernel_dim == 0,
            f"kernel dim {k.kernel_dim}")
    rep.add("sl6/restriction/image-rank=35", "image is sl(6)", k.image_rank == 35,
            f"image rank {k.image_rank}")
    rep.add("sl6/restriction/image-traceless", "image is sl(6)", k.traceless, "a traceless check failed")
    J = build_J()
    rep.add("sl6/J-not-in-closure", "J lies outside the algebra", J not in L, "J is in the closure")
    tr = restrict(J).trace()
    rep.add("sl6/trace(J|V)=-12i", "J lies outside the algebra", tr == GaussianRational(0, -12),
            f"trace {tr}")
    return rep


def suite_quadratic() -> VerificationReport:
    rep = VerificationReport("quadratic")
    Q = quadratic_space()
    rep.add("quadratic/dim=66", "quadratic Clifford space", Q.dim == 66, f"dim {Q.dim}")
    split = j_weight_split()
    total = sum(s.dim for s in split.values())
    rep.add("quadratic/weights/total=66", "ad(J) weight decomposition", total == 66, f"sum {total}")
    w0 = split[0]
    rep.add("quadratic/weights/zero-part-dim=36", "ad(J) weight decomposition", w0.dim == 36,
            f"dim {w0.dim}")
    mons = j_invariant_quadratics()
    mspan = VectorSpan([Q.coordinates(m) for m in mons])
    rep.add("quadratic/monomials/independent", "36 invariant monomials", len(mons) == 36 and mspan.dim == 36,
            f"{len(mons)} monomials of rank {mspan.dim}")
    rep.add("quadratic/monomials/span-zero-part", "36 invariant monomials", same_span(mspan, w0),
            "spans differ")
    L = generated_algebra()
    LJ = VectorSpan([Q.coordinates(t) for t in L.basis] + [Q.coordinates(build_J())])
    rep.add("quadratic/closure+J=zero-part", "invariants are the algebra plus J",
            LJ.dim == 36 and same_span(LJ, w0), f"dim {LJ.dim}")
    C66 = closure66(generators())
    back = OperatorSpan([q.to_operator() for q in C66.basis], track=False)
    rep.add("quadratic/closure66/dim=35", "structure-constant closure", C66.dim == 35, f"dim {C66.dim}")
    rep.add("quadratic/closure66=closure4096", "structure-constant closure", same_span(back, L),
            "bases are not mutually contained")
    return rep


def suite_cartan() -> VerificationReport:
    rep = VerificationReport("cartan")
    H = [cartan.build_H(j) for j in range(3)]
    S = [cartan.build_S(j) for j in range(3)]
    anchor = "torus relations"
    for j in range(3):
        rep.add(f"cartan/H{j}-self-adjoint", anchor, H[j].adjoint() == H[j], _nnz(H[j].adjoint() - H[j]))
    for j in range(3):
        for k in range(3):
            same = j == k
            for fam, coef in (("L", 2 if same else 1), ("Lam", -2 if same else -1),
                              ("V", 0 if same else 2), ("A", 0 if same else -2)):
                t = get_operator(f"{fam}{k}")
                diff = H[j].bracket(t) - t.scale(coef)
                rep.add(f"cartan/[H{j},{fam}{k}]={coef}{fam}{k}", anchor, diff.is_zero(), _nnz(diff))
    torus = H
    for name, w in cartan.WEIGHT_TABLE.items():
        adj = {"L": "Lam", "V": "A"}[name[0]] + name[1:]
        for nm, want in ((name, w), (adj, tuple(-x for x in w))):
            try:
                got = cartan.weight_of(get_operator(nm), torus)
                rep.add(f"cartan/weight/{nm}={want}", "weight list", got == want, f"computed {got}")
            except cartan.NotAnEigenvector as exc:
                rep.add(f"cartan/weight/{nm}={want}", "weight list", False, str(exc))
    for name, want in cartan.RESTRICTED_DIAGONALS.items():
        m = restrict(get_operator(name))
        ok = m.is_diagonal() and m.diagonal() == tuple(GaussianRational(x) for x in want)
        rep.add(f"cartan/diagonal/{name}", "restricted Cartan diagonals", ok,
                f"computed {[str(x) for x in m.diagonal()]}")
    ssum = S[0] + S[1] + S[2]
    rep.add("cartan/S0+S1+S2=0", "relation among the S_j", ssum.is_zero(), _nnz(ssum))
    hs = H + S
    h = cartan.cartan_subalgebra()
    rep.add("cartan/H/dim=5", "Cartan subalgebra", h.dim == 5, f"dim {h.dim}")
    comm = [(a, b) for a in range(6) for b in range(a + 1, 6) if not hs[a].bracket(hs[b]).is_zero()]
    rep.add("cartan/H/abelian", "Cartan subalgebra", not comm, f"noncommuting pairs {comm}")
    diags = [restrict(t) for t in hs]
    dspan = VectorSpan(diags, track=False)
    ok = all(m.is_diagonal() and not m.trace() for m in diags) and dspan.dim == 5
    rep.add("cartan/H|V=traceless-diagonals", "Cartan subalgebra", ok, f"rank {dspan.dim}")
    notation = cartan.resolve_unit_notation()
    rep.add(f"cartan/matrix-unit-notation/{notation}", "pure-weight operators", True)
    for name in cartan.LIJ_UNITS:
        got = restrict(get_operator(name))
        want = cartan.unit_matrix(name)
        rep.add(f"cartan/restricted/{name}", "pure-weight operators", got == want,
                str(got.first_difference(want)))
    for i in (1, 2):
        for j in range(3):
            Lij, Mij = cartan.build_Lij(i, j), cartan.build_Lambdaij(i, j)
            for k in range(3):
                d = 1 if k == j else 0
                rels = (
                    (f"[H{k},L{i}{j}]", H[k].bracket(Lij), Lij.scale(1 + d)),
                    (f"[H{k},Lam{i}{j}]", H[k].bracket(Mij), Mij.scale(-(1 + d))),
                    (f"[S{k},L{i}{j}]", S[k].bracket(Lij), Lij.scale((-1) ** (i + 1) * (1 - 3 * d))),
                    (f"[S{k},Lam{i}{j}]", S[k].bracket(Mij), Mij.scale((-1) ** i * (1 - 3 * d))),
                )
                for rid, got, want in rels:
                    rep.add(f"cartan/pure-weight/{rid}", "pure-weight relations", got == want, _nnz(got - want))
    for k in range(3):
        for j in range(3):
            for fam in ("V", "A"):
                c = S[k].bracket(get_operator(f"{fam}{j}"))
                rep.add(f"cartan/pure-weight/[S{k},{fam}{j}]=0", "pure-weight relations", c.is_zero(), _nnz(c))
    hspan = OperatorSpan(H)
    for j in range(3):
        va = get_operator(f"V{j}").bracket(get_operator(f"A{j}"))
        rep.add(f"cartan/[V{j},A{j}]-in-span(H0,H1,H2)", "torus relations", va in hspan,
                "not in the span")
    return rep


def suite_serre() -> VerificationReport:
    rep = VerificationReport("serre")
    S = cartan.build_serre()
    for k in range(5):
        e, f = S.e[k], S.f[k]
        rep.add(f"serre/f{k+1}=e{k+1}*", "Serre generators", f == e.adjoint(), _nnz(f - e.adjoint()))
    for k in range(1, 6):
        want = cartan.h_formula(k)
        rep.add(f"serre/h{k}-formula", "Serre generators", S.h[k - 1] == want, _nnz(S.h[k - 1] - want))
    for k in range(1, 6):
        m = restrict(S.h[k - 1])
        want = Matrix6.unit(k + 1, k + 1) - Matrix6.unit(k, k)
        rep.add(f"serre/h{k}|V=E{k+1}{k+1}-E{k}{k}", "Serre generators", m == want,
                str(m.first_difference(want)))
    for r in cartan.serre_relations(S):
        rep.add(f"serre/relation/{r.id}", "Serre relations", r.passed, r.witness)
    for k, u in cartan.serre_phases(S):
        if u is None:
            rep.add(f"serre/e{k}|V-adjacent-unit", "Serre generator phases", False,
                    f"e{k}|V is not a multiple of E({k+1},{k})")
            continue
        rep.add(f"serre/e{k}|V={u}*E({k+1},{k})/unit-modulus", "Serre generator phases",
                u.norm() == 1, f"u = {u}, |u|^2 = {u.norm()}")
    for k, ok in cartan.orthonormal_phases(S):
        rep.add(f"serre/e{k}|V-orthonormal-basis/unit-modulus", "Serre generator phases", ok,
                "modulus differs from 1 after normalizing the basis")
    return rep


def _homogeneous_pool() -> list[tuple[str, Operator]]:
    names = list(GENERATOR_NAMES) + [f"{p}{j}" for p in ("H", "S") for j in range(3)]
    names += [f"{p}{i}{j}" for p in ("L", "Lam") for i in (1, 2) for j in range(3)]
    names += [f"{p}{i}{j}" for p in ("E", "I") for i in (1, 2) for j in range(3)]
    names += [f"{p}{k}" for p in ("e", "f") for k in range(1, 6)]
    return [(n, get_operator(n)) for n in names]


def mdeg_additivity_pairs(count: int = MDEG_SAMPLES, seed: int = MDEG_SEED):
    """``count`` seeded pairs of homogeneous operators with nonzero bracket."""
    rng = random.Random(seed)
    pool = _homogeneous_pool()
    out = []
    while len(out) < count:
        (a, x), (b, y) = rng.choice(pool), rng.choice(pool)
        c = x.bracket(y)
        if not c.is_zero():
            out.append((a, x, b, y, c))
    return out


def suite_mdeg() -> VerificationReport:
    rep = VerificationReport("mdeg")
    for name, want in cartan.MDEG_TABLE.items():
        try:
            got = cartan.mdeg_of_operator(get_operator(name))
            rep.add(f"mdeg/{name}={want}", "multidegree table", got == want, f"computed {got}")
        except cartan.NotHomogeneous as exc:
            rep.add(f"mdeg/{name}={want}", "multidegree table", False, str(exc))
    for n, (a, x, b, y, c) in enumerate(mdeg_additivity_pairs()):
        da, db = cartan.mdeg_of_operator(x), cartan.mdeg_of_operator(y)
        want = tuple(p + q for p, q in zip(da, db))
        try:
            got = cartan.mdeg_of_operator(c)
            ok, wit = got == want, f"computed {got}, expected {want}"
        except cartan.NotHomogeneous as exc:
            ok, wit = False, str(exc)
        rep.add(f"mdeg/additivity/{n:02d}/[{a},{b}]", "multidegree additivity", ok, wit)
    mixed = get_operator("L0") + get_operator("V0")
    try:
        cartan.mdeg_of_operator(mixed)
        rep.add("mdeg/L0+V0-not-homogeneous", "multidegree table", False, "no error raised")
    except cartan.NotHomogeneous:
        rep.add("mdeg/L0+V0-not-homogeneous", "multidegree table", True)
    return rep


def suite_spans() -> VerificationReport:
    rep = VerificationReport("spans")
    for s in cartan.span_identities():
        rep.add(f"spans/{s.id}", "quadratic monomial spans", s.passed,
                f"left<=right {s.left_in_right}, right<=left {s.right_in_left}, dims {s.left_dim}/{s.right_dim}")
    return rep


SUITES = {
    "clifford": suite_clifford,
    "s3": suite_s3,
    "so2": suite_so2,
    "sl6": suite_sl6,
    "quadratic": suite_quadratic,
    "cartan": suite_cartan,
    "serre": suite_serre,
    "mdeg": suite_mdeg,
    "spans": suite_spans,
}


def run_suite(name: str) -> VerificationReport:
    if name == "all":
        return run_all()
    try:
        fn = SUITES[name]
    except KeyError:
        raise UnknownSuite(name) from None
    return fn()


def run_all() -> VerificationReport:
    rep = VerificationReport("all")
    for fn in SUITES.values():
        rep.extend(fn().checks)
    return rep
