"""The quadratic part C2 of the Clifford algebra acting on forms.

The twelve Clifford generators act as ``x_0..x_5 = E_v`` and
``x_6..x_11 = I_v`` (same coframe order as the exterior module), with
anticommutators ``{x_a, x_b} = g_ab``, where ``g`` is 1 exactly on the pairs
``(E_v, I_v)``. C2 is spanned by the 66 elements ``q_ab = 1/2 [x_a, x_b]``
(``a < b``). In that basis the bracket has integer structure constants::

    [q_ab, q_cd] = g_bc q_ad - g_ac q_bd + g_bd q_ca - g_ad q_cb

which gives a second closure route, independent of 64x64 matrix products.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .. import _kernels as K
from ..scalars import GaussianRational, ONE
from .operator import Operator
from .span import OperatorSpan, VectorSpan, lie_closure

__all__ = [
    "CLIFFORD_NAMES",
    "clifford_generator",
    "QUAD_PAIRS",
    "QVec",
    "QuadraticSpace",
    "quadratic_space",
    "NotQuadratic",
    "DependentSet",
    "structure_bracket",
    "closure66",
    "j_weight_split",
    "JINV_MONOMIALS",
    "j_invariant_quadratics",
]

N_GEN = 12
CLIFFORD_NAMES = tuple(
    [f"E{i}{j}" for j in range(3) for i in (1, 2)] + [f"I{i}{j}" for j in range(3) for i in (1, 2)]
)
QUAD_PAIRS: tuple[tuple[int, int], ...] = tuple(combinations(range(N_GEN), 2))
_PAIR_INDEX = {p: k for k, p in enumerate(QUAD_PAIRS)}
NQ = len(QUAD_PAIRS)


class NotQuadratic(ValueError):
    """The operator is not in the span of C2."""


class DependentSet(ValueError):
    """A set claimed to be a basis is linearly dependent."""


def clifford_generator(a: int) -> Operator:
    from ..canon_ops import E, I_op

    name = CLIFFORD_NAMES[a]
    i, j = int(name[1]), int(name[2])
    return E(i, j) if name[0] == "E" else I_op(i, j)


def _g(a: int, b: int) -> int:
    return 1 if abs(a - b) == 6 else 0


def _q(x: int, y: int) -> tuple[int, int] | None:
    """``q_xy`` as ``(sign, basis index)``; ``None`` for ``x == y``."""
    if x == y:
        return None
    if x < y:
        return 1, _PAIR_INDEX[(x, y)]
    return -1, _PAIR_INDEX[(y, x)]


@lru_cache(maxsize=None)
def _structure_table() -> dict[tuple[int, int], dict[int, int]]:
    table = {}
    for p, (a, b) in enumerate(QUAD_PAIRS):
        for r, (c, d) in enumerate(QUAD_PAIRS):
            acc: dict[int, int] = {}
            for coef, x, y in (
                (_g(b, c), a, d),
                (-_g(a, c), b, d),
                (_g(b, d), c, a),
                (-_g(a, d), c, b),
            ):
                if coef:
                    q = _q(x, y)
                    if q is not None:
                        acc[q[1]] = acc.get(q[1], 0) + coef * q[0]
            acc = {k: v for k, v in acc.items() if v}
            if acc:
                table[(p, r)] = acc
    return table


class QVec:
    """Element of C2 in the basis ``q_ab``: ``flat / den`` with Gaussian-integer ``flat``."""

    __slots__ = ("flat", "den", "name")

    def __init__(self, flat: dict | None = None, den: int = 1, name: str | None = None):
        flat = {k: v for k, v in (flat or {}).items() if v[0] or v[1]}
        if flat:
            g = gcd(K.content(flat), den)
            if g > 1:
                flat, den = K.divide(flat, g), den // g
        else:
            den = 1
        self.flat = flat
        self.den = den
        self.name = name

    @classmethod
    def basis(cls, p: int) -> "QVec":
        return cls({p: (1, 0)}, 1, f"q{QUAD_PAIRS[p]}")

    def __eq__(self, other):
        return isinstance(other, QVec) and self.den == other.den and self.flat == other.flat

    def __hash__(self):
        return hash((self.den, frozenset(self.flat.items())))

    def is_zero(self) -> bool:
        return not self.flat

    def __add__(self, other: "QVec") -> "QVec":
        return QVec(K.lincomb(self.flat, (other.den, 0), other.flat, (self.den, 0)),
                    self.den * other.den)

    def __sub__(self, other: "QVec") -> "QVec":
        return QVec(K.lincomb(self.flat, (other.den, 0), other.flat, (-self.den, 0)),
                    self.den * other.den)

    def scale(self, c) -> "QVec":
        (a, b), d = GaussianRational.coerce(c).as_integer_ratio()
        return QVec(K.lincomb(self.flat, (a, b), {}, (0, 0)), self.den * d)

    def bracket(self, other: "QVec") -> "QVec":
        return structure_bracket(self, other)

    def coefficient(self, p: int) -> GaussianRational:
        a, b = self.flat.get(p, (0, 0))
        return GaussianRational(Fraction(a, self.den), Fraction(b, self.den))

    def to_operator(self) -> Operator:
        space = quadratic_space()
        total = Operator.zero()
        for p in sorted(self.flat):
            total = total + space.elements[p].scale(self.coefficient(p))
        return total.named(self.name) if self.name else total

    def __repr__(self):
        return f"<QVec {self.name or '?'} nnz={len(self.flat)} den={self.den}>"


def structure_bracket(x: QVec, y: QVec) -> QVec:
    table = _structure_table()
    re_acc: dict[int, int] = {}
    im_acc: dict[int, int] = {}
    for p, (xr, xi) in x.flat.items():
        for r, (yr, yi) in y.flat.items():
            row = table.get((p, r))
            if row is None:
                continue
            cr = xr * yr - xi * yi
            ci = xr * yi + xi * yr
            for k, s in row.items():
                re_acc[k] = re_acc.get(k, 0) + s * cr
                im_acc[k] = im_acc.get(k, 0) + s * ci
    flat = {k: (re_acc[k], im_acc[k]) for k in re_acc}
    return QVec(flat, x.den * y.den)


@dataclass(frozen=True)
class QuadraticSpace:
    """C2 as 64x64 operators, with coordinates in the ``q_ab`` basis."""

    elements: tuple[Operator, ...]
    span: OperatorSpan

    @property
    def dim(self) -> int:
        return self.span.dim

    def coordinates(self, t: Operator) -> QVec:
        m = self.span.contains(t)
        if not m.member:
            raise NotQuadratic(f"{t.name or 'operator'} is not in C2")
        # the span was seeded with ``elements`` in order, so members == elements
        flat = {}
        den = 1
        for c in m.coefficients:
            if c:
                _, d = c.as_integer_ratio()
                den = den * d // gcd(den, d)
        for p, c in enumerate(m.coefficients):
            if c:
                (a, b), d = c.as_integer_ratio()
                flat[p] = (a * (den // d), b * (den // d))
        return QVec(flat, den, t.name)

    def __contains__(self, t: Operator) -> bool:
        return t in self.span


@lru_cache(maxsize=None)
def quadratic_space() -> QuadraticSpace:
    half = GaussianRational(Fraction(1, 2))
    gens = [clifford_generator(a) for a in range(N_GEN)]
    elements = []
    for a, b in QUAD_PAIRS:
        elements.append(gens[a].bracket(gens[b]).scale(half).named(
            f"q({CLIFFORD_NAMES[a]},{CLIFFORD_NAMES[b]})"))
    span = OperatorSpan(elements)
    if span.dim != NQ:
        raise DependentSet(f"C2 spans only {span.dim} dimensions")
    return QuadraticSpace(tuple(elements), span)


def closure66(generators: Sequence[Operator], max_rounds: int | None = None) -> VectorSpan:
    """Lie closure computed entirely with C2 structure constants."""
    space = quadratic_space()
    qgens = [space.coordinates(g) for g in generators]

    def br(x: QVec, g: QVec) -> QVec:
        out = structure_bracket(x, g)
        out.name = f"[{x.name or '?'},{g.name or '?'}]"
        return out

    return lie_closure(qgens, br, VectorSpan(), max_rounds)


# -- ad(J) weights -------------------------------------------------------------

WEIGHTS = (-2, -1, 0, 1, 2)


def _ad(j: QVec, x: QVec) -> QVec:
    return structure_bracket(j, x)


def _project(j: QVec, x: QVec, k: int) -> QVec:
    """Spectral projector onto the ``k*i`` eigenspace of ad(J) (eigenvalues in WEIGHTS)."""
    out = x
    for m in WEIGHTS:
        if m == k:
            continue
        shifted = _ad(j, out) - out.scale(GaussianRational(0, m))
        out = shifted.scale(ONE / GaussianRational(0, k - m))
    return out


@lru_cache(maxsize=None)
def j_weight_split() -> dict[int, VectorSpan]:
    """ad(J)-eigenspaces of C2 in ``q_ab`` coordinates, keyed by integer weight.

    Raises if ad(J) is not diagonalizable with eigenvalues ``k*i``,
    ``k`` in ``WEIGHTS``, i.e. if the projected pieces fail to be eigenvectors
    or fail to add up to all of C2.
    """
    from ..canon_ops import build_J

    space = quadratic_space()
    jq = space.coordinates(build_J())
    out = {}
    for k in WEIGHTS:
        vecs = []
        for p in range(NQ):
            v = _project(jq, QVec.basis(p), k)
            if v.is_zero():
                continue
            if not (_ad(jq, v) - v.scale(GaussianRational(0, k))).is_zero():
                raise AssertionError(f"projection to weight {k} is not an eigenvector")
            vecs.append(v)
        out[k] = VectorSpan(vecs)
    if sum(s.dim for s in out.values()) != NQ:
        raise AssertionError("ad(J) eigenspaces do not fill C2")
    return out


# -- the 36 J-invariant monomials ------------------------------------------------

JINV_MONOMIALS: tuple[tuple[str, str], ...] = (
    # E_w with E_wbar, mixed columns
    ("Ew0", "Ewbar1"), ("Ew0", "Ewbar2"), ("Ew1", "Ewbar2"),
    ("Ew1", "Ewbar0"), ("Ew2", "Ewbar0"), ("Ew2", "Ewbar1"),
    # I_w with I_wbar, mixed columns
    ("Iw0", "Iwbar1"), ("Iw0", "Iwbar2"), ("Iw1", "Iwbar2"),
    ("Iw1", "Iwbar0"), ("Iw2", "Iwbar0"), ("Iw2", "Iwbar1"),
    # same column
    ("Ew0", "Ewbar0"), ("Ew1", "Ewbar1"), ("Ew2", "Ewbar2"),
    ("Iw0", "Iwbar0"), ("Iw1", "Iwbar1"), ("Iw2", "Iwbar2"),
    # E_w with I_w, mixed columns
    ("Ew0", "Iw1"), ("Ew0", "Iw2"), ("Ew1", "Iw0"),
    ("Ew1", "Iw2"), ("Ew2", "Iw0"), ("Ew2", "Iw1"),
    # E_wbar with I_wbar, mixed columns
    ("Ewbar0", "Iwbar1"), ("Ewbar0", "Iwbar2"), ("Ewbar1", "Iwbar0"),
    ("Ewbar1", "Iwbar2"), ("Ewbar2", "Iwbar0"), ("Ewbar2", "Iwbar1"),
    # diagonal
    ("Ew0", "Iw0"), ("Ew1", "Iw1"), ("Ew2", "Iw2"),
    ("Ewbar0", "Iwbar0"), ("Ewbar1", "Iwbar1"), ("Ewbar2", "Iwbar2"),
)


def monomial_operator(a: str, b: str) -> Operator:
    from ..canon_ops import get_operator

    return get_operator(a).bracket(get_operator(b)).named(f"[{a},{b}]")


@lru_cache(maxsize=None)
def j_invariant_quadratics() -> tuple[Operator, ...]:
    """The 36 bracket monomials, checked independent."""
    ops = tuple(monomial_operator(a, b) for a, b in JINV_MONOMIALS)
    span = OperatorSpan(ops, track=False)
    if span.dim != len(ops):
        raise DependentSet(f"the {len(ops)} monomials span only {span.dim} dimensions")
    return ops
