"""Cartan subalgebra, pure-weight operators, and Serre generators of L_C.

Everything is assembled at the 64x64 level from the canonical generators and
only then restricted to V where a statement is about restricted matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from .canon_ops import adjoint_ops, build_J, build_L, build_V, build_w_ops, get_operator
from .exterior import DIM, mdeg_of_monomial
from .lie.operator import Operator
from .lie.span import OperatorSpan, VectorSpan
from .reptheory import Matrix6, restrict, v_subspace
from .scalars import GaussianRational, I

__all__ = [
    "NotAnEigenvector",
    "NotHomogeneous",
    "build_H",
    "build_S",
    "weight_of",
    "cartan_subalgebra",
    "build_Lij",
    "build_Lambdaij",
    "SerreSystem",
    "CARTAN_A5",
    "build_serre",
    "serre_relations",
    "mdeg_of_operator",
    "span_identities",
    "resolve_unit_notation",
    "registry_entries",
    "orthonormal_phases",
    "serre_phases",
    "unit_matrix",
    "h_formula",
    "WEIGHT_TABLE",
    "MDEG_TABLE",
    "RESTRICTED_DIAGONALS",
    "LIJ_UNITS",
    "H_FORMULAS",
]

HALF = GaussianRational(Fraction(1, 2))
QUARTER = GaussianRational(Fraction(1, 4))


class NotAnEigenvector(ValueError):
    def __init__(self, torus_index: int, residual: Operator | None = None, detail: str = ""):
        super().__init__(f"not an eigenvector of torus element {torus_index}{detail}")
        self.torus_index = torus_index
        self.residual = residual


class NotHomogeneous(ValueError):
    def __init__(self, first: tuple[int, int], second: tuple[int, int]):
        super().__init__(
            f"entries {first} and {second} (row, col) shift the multidegree differently"
        )
        self.witness = (first, second)


# -- torus ------------------------------------------------------------------

@lru_cache(maxsize=None)
def build_H(j: int) -> Operator:
    return build_L(j).bracket(adjoint_ops(j)[0]).named(f"H{j}")


@lru_cache(maxsize=None)
def build_S(j: int) -> Operator:
    """``i [[[V_j, Lam_{j+1}], Lam_{j+2}], L_j]``, indices mod 3."""
    lam = lambda k: adjoint_ops(k % 3)[0]
    inner = build_V(j).bracket(lam(j + 1)).bracket(lam(j + 2)).bracket(build_L(j))
    return inner.scale(I).named(f"S{j}")


def torus() -> list[Operator]:
    return [build_H(j) for j in range(3)]


def weight_of(t: Operator, torus_ops: Sequence[Operator]) -> tuple[int, ...]:
    """Integer eigenvalues of ``ad(h)`` on ``t`` for each ``h`` in ``torus_ops``."""
    if t.is_zero():
        raise ValueError("the zero operator has no weight")
    key = min(t.flat)
    r, c = divmod(key, DIM)
    out = []
    for idx, h in enumerate(torus_ops):
        image = h.bracket(t)
        lam = image.entry(r, c) / t.entry(r, c)
        residual = image - t.scale(lam)
        if not residual.is_zero():
            raise NotAnEigenvector(idx, residual)
        if lam.im or lam.re.denominator != 1:
            raise NotAnEigenvector(idx, None, f": eigenvalue {lam} is not an integer")
        out.append(int(lam.re))
    return tuple(out)


@lru_cache(maxsize=None)
def cartan_subalgebra() -> OperatorSpan:
    return OperatorSpan([build_H(j) for j in range(3)] + [build_S(j) for j in range(3)])


# -- pure-weight operators ---------------------------------------------------

@lru_cache(maxsize=None)
def build_Lij(i: int, j: int) -> Operator:
    L = build_L(j)
    sl = build_S(j).bracket(L)
    base = L.scale(-2) if i == 1 else L.scale(2)
    return (base + sl).named(f"L{i}{j}")


@lru_cache(maxsize=None)
def build_Lambdaij(i: int, j: int) -> Operator:
    lam = adjoint_ops(j)[0]
    sl = build_S(j).bracket(lam)
    base = lam.scale(-2) if i == 1 else lam.scale(2)
    return (base - sl).named(f"Lam{i}{j}")


# -- Serre generators -------------------------------------------------------

CARTAN_A5 = tuple(
    tuple(2 if a == b else (-1 if abs(a - b) == 1 else 0) for b in range(5)) for a in range(5)
)

# k -> (e_k, f_k); a pair (a, b) means 1/4 [a, b], a string a bare generator
_SERRE_DEF = {
    1: (("L20", "A1"), ("V1", "Lam20")),
    2: (("L22", "A0"), ("V0", "Lam22")),
    3: ("V0", "A0"),
    4: (("L12", "A0"), ("V0", "Lam12")),
    5: (("L10", "A1"), ("V1", "Lam10")),
}


def _serre_piece(entry) -> Operator:
    if isinstance(entry, str):
        return get_operator(entry)
    a, b = entry
    return get_operator(a).bracket(get_operator(b)).scale(QUARTER)


@dataclass
class SerreSystem:
    e: list[Operator]
    f: list[Operator]
    h: list[Operator]
    cartan_matrix: tuple = CARTAN_A5


@lru_cache(maxsize=None)
def build_serre() -> SerreSystem:
    e, f, h = [], [], []
    for k in range(1, 6):
        es, fs = _SERRE_DEF[k]
        ek = _serre_piece(es).named(f"e{k}")
        fk = _serre_piece(fs).named(f"f{k}")
        e.append(ek)
        f.append(fk)
        h.append(ek.bracket(fk).named(f"h{k}"))
    return SerreSystem(e, f, h)


@dataclass
class Relation:
    """One checked identity; ``witness`` is set when it fails."""

    id: str
    passed: bool
    witness: str | None = None


def _zero_check(rid: str, op: Operator) -> Relation:
    return Relation(rid, op.is_zero(), None if op.is_zero() else f"residual nnz={op.nnz}")


def serre_relations(S: SerreSystem | None = None) -> list[Relation]:
    """The full Chevalley-Serre relation set for the stored Cartan matrix."""
    S = S or build_serre()
    A = S.cartan_matrix
    n = len(S.e)
    out = []
    for i in range(n):
        for j in range(n):
            out.append(_zero_check(f"[h{i+1},h{j+1}]=0", S.h[i].bracket(S.h[j])))
    for i in range(n):
        for j in range(n):
            want = S.h[i] if i == j else Operator.zero()
            out.append(_zero_check(f"[e{i+1},f{j+1}]=delta*h{i+1}", S.e[i].bracket(S.f[j]) - want))
    for i in range(n):
        for j in range(n):
            a = A[i][j]
            out.append(_zero_check(f"[h{i+1},e{j+1}]={a}e{j+1}",
                                   S.h[i].bracket(S.e[j]) - S.e[j].scale(a)))
            out.append(_zero_check(f"[h{i+1},f{j+1}]={-a}f{j+1}",
                                   S.h[i].bracket(S.f[j]) + S.f[j].scale(a)))
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            power = 1 - A[i][j]
            xe, xf = S.e[j], S.f[j]
            for _ in range(power):
                xe = S.e[i].bracket(xe)
                xf = S.f[i].bracket(xf)
            out.append(_zero_check(f"ad(e{i+1})^{power}(e{j+1})=0", xe))
            out.append(_zero_check(f"ad(f{i+1})^{power}(f{j+1})=0", xf))
    return out


# -- multidegree ----------------------------------------------------------------

def mdeg_of_operator(t: Operator) -> tuple[int, int, int]:
    """The fixed multidegree shift of a homogeneous operator."""
    if t.is_zero():
        raise ValueError("the zero operator has no multidegree")
    shift = None
    first = None
    for key in sorted(t.flat):
        r, c = divmod(key, DIM)
        mr, mc = mdeg_of_monomial(r), mdeg_of_monomial(c)
        d = tuple(x - y for x, y in zip(mr, mc))
        if shift is None:
            shift, first = d, (r, c)
        elif d != shift:
            raise NotHomogeneous(first, (r, c))
    return shift


# -- span identities against quadratic monomials ----------------------------------

def _w(name: str, j: int) -> Operator:
    idx = {"Ew": 0, "Ewbar": 1, "Iw": 2, "Iwbar": 3}[name]
    return build_w_ops(j)[idx]


def _mono(a: str, j: int, b: str, k: int) -> Operator:
    return _w(a, j).bracket(_w(b, k)).named(f"[{a}{j},{b}{k}]")


@dataclass
class SpanIdentity:
    id: str
    left: list[Operator]
    right: list[Operator]
    left_in_right: bool = False
    right_in_left: bool = False
    left_dim: int = 0
    right_dim: int = 0

    @property
    def passed(self) -> bool:
        return self.left_in_right and self.right_in_left and self.left_dim == self.right_dim


def _compare(rid: str, left: list[Operator], right: list[Operator]) -> SpanIdentity:
    ls, rs = OperatorSpan(left, track=False), OperatorSpan(right, track=False)
    return SpanIdentity(
        rid, left, right,
        left_in_right=all(x in rs for x in left),
        right_in_left=all(x in ls for x in right),
        left_dim=ls.dim,
        right_dim=rs.dim,
    )


def span_identities() -> list[SpanIdentity]:
    """All five identities, for every ordering of the columns ``{j, k, l}``."""
    out = []
    for j, k, l in permutations(range(3)):
        tag = f"j={j},k={k},l={l}"
        out.append(_compare(
            f"Span(L1{j},L2{j})=Span([Ew{k},Ewbar{l}],[Ew{l},Ewbar{k}]) {tag}",
            [build_Lij(1, j), build_Lij(2, j)],
            [_mono("Ew", k, "Ewbar", l), _mono("Ew", l, "Ewbar", k)],
        ))
        out.append(_compare(
            f"Span(Lam1{j},Lam2{j})=Span([Iw{k},Iwbar{l}],[Iw{l},Iwbar{k}]) {tag}",
            [build_Lambdaij(1, j), build_Lambdaij(2, j)],
            [_mono("Iw", k, "Iwbar", l), _mono("Iw", l, "Iwbar", k)],
        ))
    for j in range(3):
        out.append(_compare(f"Span(V{j})=Span([Ew{j},Ewbar{j}])",
                            [build_V(j)], [_mono("Ew", j, "Ewbar", j)]))
        out.append(_compare(f"Span(A{j})=Span([Iw{j},Iwbar{j}])",
                            [adjoint_ops(j)[1]], [_mono("Iw", j, "Iwbar", j)]))
    out.append(_compare(
        "H+Span(J)=sum_m Span([Ewm,Iwm],[Ewbarm,Iwbarm])",
        list(cartan_subalgebra().basis) + [build_J()],
        [op for m in range(3) for op in (_mono("Ew", m, "Iw", m), _mono("Ewbar", m, "Iwbar", m))],
    ))
    return out


# -- reference tables ---------------------------------------------------------------
# Transcribed by hand; the checks compare computed values against these.

WEIGHT_TABLE = {
    "L0": (2, 1, 1), "L1": (1, 2, 1), "L2": (1, 1, 2),
    "V0": (0, 2, 2), "V1": (2, 0, 2), "V2": (2, 2, 0),
}

MDEG_TABLE = {
    "L0": (0, 1, 1), "L1": (1, 0, 1), "L2": (1, 1, 0),
    "Lam0": (0, -1, -1), "Lam1": (-1, 0, -1), "Lam2": (-1, -1, 0),
    "V0": (2, 0, 0), "V1": (0, 2, 0), "V2": (0, 0, 2),
    "A0": (-2, 0, 0), "A1": (0, -2, 0), "A2": (0, 0, -2),
    "H0": (0, 0, 0), "H1": (0, 0, 0), "H2": (0, 0, 0),
    "S0": (0, 0, 0), "S1": (0, 0, 0), "S2": (0, 0, 0),
}

RESTRICTED_DIAGONALS = {
    "H0": (-1, -1, 0, 0, 1, 1),
    "H1": (-1, 0, -1, 1, 0, 1),
    "H2": (0, -1, -1, 1, 1, 0),
    "S0": (-1, 1, 0, 0, 1, -1),
    "S1": (1, 0, -1, -1, 0, 1),
    "S2": (0, -1, 1, 1, -1, 0),
}

# name -> (coefficient, subscript index, superscript index) of ``c * e_sub^sup``
LIJ_UNITS = {
    "L10": (2, 6, 2), "L11": (-2, 4, 1), "L12": (-2, 5, 3),
    "L20": (-2, 5, 1), "L21": (-2, 6, 3), "L22": (2, 4, 2),
    "Lam10": (8, 2, 6), "Lam11": (-8, 1, 4), "Lam12": (-8, 3, 5),
    "Lam20": (-8, 1, 5), "Lam21": (-8, 3, 6), "Lam22": (8, 2, 4),
}

# h_k = 1/2 * sum(coef * name)
H_FORMULAS = {
    1: {"H1": 1, "H2": -1, "S1": -1, "S2": -1},
    2: {"H0": 1, "H1": -1, "S2": 1},
    3: {"H0": -1, "H1": 1, "H2": 1},
    4: {"H0": 1, "H1": -1, "S2": -1},
    5: {"H1": 1, "H2": -1, "S1": 1, "S2": 1},
}


def resolve_unit_notation() -> str:
    """Decide which index of ``e_sub^sup`` is the row.

    Tries both readings against the computed restriction of ``L10`` and
    returns ``"subscript=row"`` or ``"superscript=row"``; raises if neither or
    both fit.
    """
    coef, sub, sup = LIJ_UNITS["L10"]
    got = restrict(build_Lij(1, 0))
    fits = []
    if got == Matrix6.unit(sub, sup).scale(coef):
        fits.append("subscript=row")
    if got == Matrix6.unit(sup, sub).scale(coef):
        fits.append("superscript=row")
    if len(fits) != 1:
        raise AssertionError(f"matrix-unit notation ambiguous against L10: {fits}")
    return fits[0]


def unit_matrix(name: str) -> Matrix6:
    coef, sub, sup = LIJ_UNITS[name]
    if resolve_unit_notation() == "subscript=row":
        return Matrix6.unit(sub, sup).scale(coef)
    return Matrix6.unit(sup, sub).scale(coef)


def h_formula(k: int) -> Operator:
    total = Operator.zero()
    for name, coef in H_FORMULAS[k].items():
        total = total + get_operator(name).scale(coef)
    return total.scale(HALF)


def serre_phases(S: SerreSystem | None = None) -> list[tuple[int, GaussianRational | None]]:
    """For each ``e_k`` the scalar ``u`` with ``e_k|V = u * E(k+1, k)``, or None."""
    S = S or build_serre()
    out = []
    for k, e in enumerate(S.e, start=1):
        m = restrict(e)
        u = m[k + 1, k]
        out.append((k, u if u and m == Matrix6.unit(k + 1, k).scale(u) else None))
    return out


def orthonormal_phases(S: SerreSystem | None = None) -> list[tuple[int, bool]]:
    """Whether ``e_k|V`` has unit modulus once the V basis is normalized.

    Rescaling ``b_h -> b_h/|b_h|`` turns entry (r, c) into ``m[r, c] * |b_r|/|b_c|``,
    so the squared modulus is ``|m|^2 * |b_r|^2 / |b_c|^2``; no square roots needed.
    """
    S = S or build_serre()
    V = v_subspace()
    sq = [b.inner(b).re for b in V.basis]
    out = []
    for k, u in serre_phases(S):
        if u is None:
            out.append((k, False))
            continue
        out.append((k, u.norm() * sq[k] / sq[k - 1] == 1))
    return out


# -- registry hook -----------------------------------------------------------------

def registry_entries() -> dict:
    reg = {}
    for j in range(3):
        reg[f"H{j}"] = lambda j=j: build_H(j)
        reg[f"S{j}"] = lambda j=j: build_S(j)
        for i in (1, 2):
            reg[f"L{i}{j}"] = lambda i=i, j=j: build_Lij(i, j)
            reg[f"Lam{i}{j}"] = lambda i=i, j=j: build_Lambdaij(i, j)
    for k in range(1, 6):
        reg[f"e{k}"] = lambda k=k: build_serre().e[k - 1]
        reg[f"f{k}"] = lambda k=k: build_serre().f[k - 1]
        reg[f"h{k}"] = lambda k=k: build_serre().h[k - 1]
    return reg
