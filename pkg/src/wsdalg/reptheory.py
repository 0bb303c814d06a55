"""The SO(2) weight decomposition and the six-dimensional representation V.

``J`` acts on ``w_j`` with eigenvalue ``-i`` and on ``wbar_j`` with ``+i``, so a
wedge of ``p`` w's and ``q`` wbar's has weight ``q - p``. The weight ``-2``
component is six-dimensional; restricting operators to it gives the natural
representation of sl(6, C).

Matrix indices in this module are 1-based, matching the usual way the
restricted matrices are written down.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from itertools import combinations
from math import comb, gcd
from typing import Iterable, Sequence

from .canon_ops import build_J, canonical_form, get_operator, GENERATOR_NAMES
from .exterior import Multivector, degree
from .lie.operator import Operator
from .lie.span import OperatorSpan, VectorSpan
from .scalars import GaussianRational, I, ONE, ZERO, format_scalar, parse_scalar

__all__ = [
    "Matrix6",
    "NotInvariant",
    "VectorOf",
    "IsotypicalTable",
    "isotypical_table",
    "w_monomials",
    "weight_space",
    "SubrepV",
    "v_subspace",
    "restrict",
    "golden_matrices",
    "verify_generator_matrices",
    "restriction_kernel",
    "RestrictionKernel",
]


class NotInvariant(ValueError):
    """The operator moves a basis vector of V outside V."""

    def __init__(self, operator: str, column: int, residual: Multivector):
        super().__init__(
            f"{operator} does not preserve V: image of basis vector {column} "
            f"has residual {residual}"
        )
        self.operator = operator
        self.column = column
        self.residual = residual


class VectorOf:
    """Adapter giving a Multivector the ``flat``/``den`` interface of spans."""

    __slots__ = ("mv", "flat", "den")

    def __init__(self, mv: Multivector):
        self.mv = mv
        den = 1
        for _, c in mv.items():
            _, d = c.as_integer_ratio()
            den = den * d // gcd(den, d)
        flat = {}
        for m, c in mv.items():
            (a, b), d = c.as_integer_ratio()
            flat[m] = (a * (den // d), b * (den // d))
        self.flat = flat
        self.den = den


def _residual_mv(res: dict) -> Multivector:
    return Multivector({k: GaussianRational(a, b) for k, (a, b) in res.items()})


# -- 6x6 matrices ---------------------------------------------------------

class Matrix6:
    """Dense square matrix over Q(i); ``m[r, c]`` is 1-based."""

    __slots__ = ("_rows", "n")

    def __init__(self, rows: Sequence[Sequence[object]]):
        self._rows = tuple(tuple(GaussianRational.coerce(x) for x in row) for row in rows)
        self.n = len(self._rows)
        if any(len(r) != self.n for r in self._rows):
            raise ValueError("matrix must be square")

    @classmethod
    def zeros(cls, n: int = 6) -> "Matrix6":
        return cls([[ZERO] * n for _ in range(n)])

    @classmethod
    def identity(cls, n: int = 6) -> "Matrix6":
        return cls([[ONE if r == c else ZERO for c in range(n)] for r in range(n)])

    @classmethod
    def unit(cls, row: int, col: int, n: int = 6) -> "Matrix6":
        return cls([[ONE if (r, c) == (row - 1, col - 1) else ZERO for c in range(n)]
                    for r in range(n)])

    @classmethod
    def diag(cls, values: Sequence[object]) -> "Matrix6":
        n = len(values)
        return cls([[values[r] if r == c else 0 for c in range(n)] for r in range(n)])

    def __getitem__(self, rc: tuple[int, int]) -> GaussianRational:
        r, c = rc
        return self._rows[r - 1][c - 1]

    @property
    def rows(self) -> tuple[tuple[GaussianRational, ...], ...]:
        return self._rows

    def nonzero(self) -> dict[tuple[int, int], GaussianRational]:
        return {(r + 1, c + 1): x for r, row in enumerate(self._rows)
                for c, x in enumerate(row) if x}

    def __eq__(self, other):
        if not isinstance(other, Matrix6):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __add__(self, other: "Matrix6") -> "Matrix6":
        return Matrix6([[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)])

    def __sub__(self, other: "Matrix6") -> "Matrix6":
        return Matrix6([[a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)])

    def __neg__(self) -> "Matrix6":
        return Matrix6([[-a for a in r] for r in self._rows])

    def scale(self, c) -> "Matrix6":
        c = GaussianRational.coerce(c)
        return Matrix6([[c * a for a in r] for r in self._rows])

    __rmul__ = scale

    def __matmul__(self, other: "Matrix6") -> "Matrix6":
        n = self.n
        cols = list(zip(*other._rows))
        out = []
        for r in self._rows:
            row = []
            for col in cols:
                acc = ZERO
                for a, b in zip(r, col):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Matrix6(out)

    def bracket(self, other: "Matrix6") -> "Matrix6":
        return self @ other - other @ self

    def trace(self) -> GaussianRational:
        acc = ZERO
        for k in range(self.n):
            acc = acc + self._rows[k][k]
        return acc

    def diagonal(self) -> tuple[GaussianRational, ...]:
        return tuple(self._rows[k][k] for k in range(self.n))

    def is_diagonal(self) -> bool:
        return all(not x for (r, c), x in self.nonzero().items() if r != c)

    def first_difference(self, other: "Matrix6") -> tuple[int, int, GaussianRational, GaussianRational] | None:
        for r in range(self.n):
            for c in range(self.n):
                if self._rows[r][c] != other._rows[r][c]:
                    return r + 1, c + 1, self._rows[r][c], other._rows[r][c]
        return None

    def format(self) -> str:
        cells = [[format_scalar(x) for x in r] for r in self._rows]
        width = max(len(s) for r in cells for s in r)
        return "\n".join(" ".join(s.rjust(width) for s in r) for r in cells)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Matrix6(nonzero={ {k: str(v) for k, v in self.nonzero().items()} })"

    # flat/den view so restricted matrices can live in a VectorSpan
    @property
    def flat(self) -> dict:
        return _integral(self.nonzero(), self.n)[0]

    @property
    def den(self) -> int:
        return _integral(self.nonzero(), self.n)[1]


def _integral(entries: dict, n: int) -> tuple[dict, int]:
    den = 1
    for x in entries.values():
        _, d = x.as_integer_ratio()
        den = den * d // gcd(den, d)
    out = {}
    for (r, c), x in entries.items():
        (a, b), d = x.as_integer_ratio()
        out[(r - 1) * n + (c - 1)] = (a * (den // d), b * (den // d))
    return out, den


# -- weight decomposition -------------------------------------------------

@dataclass(frozen=True)
class WMonomial:
    """``w_{P} ^ wbar_{Q}`` for index sets P, Q of {0, 1, 2} (w's first, increasing)."""

    ws: tuple[int, ...]
    wbars: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.ws) + len(self.wbars)

    @property
    def weight(self) -> int:
        return len(self.wbars) - len(self.ws)

    def __str__(self):
        parts = [f"w{j}" for j in self.ws] + [f"wbar{j}" for j in self.wbars]
        return "^".join(parts) or "1"

    @property
    def value(self) -> Multivector:
        return _w_value(self)


@lru_cache(maxsize=None)
def _w_value(m: WMonomial) -> Multivector:
    out = Multivector.scalar(ONE)
    for j in m.ws:
        out = out ^ canonical_form(f"w{j}")
    for j in m.wbars:
        out = out ^ canonical_form(f"wbar{j}")
    return out


@lru_cache(maxsize=None)
def w_monomials() -> tuple[WMonomial, ...]:
    """All 64 monomials in the J-diagonal basis, by degree then weight."""
    out = []
    for p in range(4):
        for q in range(4):
            for ws in combinations(range(3), p):
                for wbars in combinations(range(3), q):
                    out.append(WMonomial(ws, wbars))
    out.sort(key=lambda m: (m.degree, m.weight))
    return tuple(out)


@dataclass(frozen=True)
class IsotypicalTable:
    """``rows[k]`` maps weight n to the multiplicity of ``V_n`` inside degree k."""

    rows: dict

    def multiplicity(self, k: int, n: int) -> int:
        return self.rows.get(k, {}).get(n, 0)

    @property
    def weights(self) -> list[int]:
        return sorted({n for r in self.rows.values() for n in r})

    def format(self) -> str:
        weights = self.weights
        head = "deg | " + " ".join(f"{n:>+4d}" for n in weights)
        lines = [head, "-" * len(head)]
        for k in sorted(self.rows):
            cells = []
            for n in weights:
                m = self.multiplicity(k, n)
                cells.append(f"{m:>4d}" if m else "   .")
            lines.append(f"{k:>3d} | " + " ".join(cells))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {str(k): {str(n): m for n, m in sorted(r.items())} for k, r in sorted(self.rows.items())}


def isotypical_table(check: bool = True) -> IsotypicalTable:
    """J-eigenspace dimensions per form degree.

    With ``check`` (default) every w-monomial is verified to be an exact
    eigenvector of the ``J`` matrix with eigenvalue ``weight * i``, and the
    monomials of each degree are verified to span that degree.
    """
    J = build_J()
    rows: dict[int, dict[int, int]] = {}
    by_degree: dict[int, list] = {}
    for m in w_monomials():
        if check:
            v = m.value
            if J.apply(v) != v.scale(GaussianRational(0, m.weight)):
                raise AssertionError(f"{m} is not a J-eigenvector of weight {m.weight}")
            by_degree.setdefault(m.degree, []).append(VectorOf(v))
        rows.setdefault(m.degree, {})
        rows[m.degree][m.weight] = rows[m.degree].get(m.weight, 0) + 1
    if check:
        for k, vecs in by_degree.items():
            if VectorSpan(vecs, track=False).dim != comb(6, k):
                raise AssertionError(f"w-monomials of degree {k} do not span")
    return IsotypicalTable(rows)


@lru_cache(maxsize=None)
def weight_space(n: int) -> VectorSpan:
    """Span of all forms (any degree) of J-weight ``n``."""
    return VectorSpan([VectorOf(m.value) for m in w_monomials() if m.weight == n])


# -- the representation V ---------------------------------------------------

V_BASIS_LABELS = (
    "w0^w1", "w0^w2", "w1^w2",
    "w0^w1^w2^wbar0", "w0^w1^w2^wbar1", "w0^w1^w2^wbar2",
)


@dataclass(frozen=True)
class SubrepV:
    basis: tuple[Multivector, ...]
    span: VectorSpan

    @property
    def dim(self) -> int:
        return self.span.dim

    def coordinates(self, phi: Multivector):
        return self.span.contains(VectorOf(phi))


@lru_cache(maxsize=None)
def v_subspace() -> SubrepV:
    J = build_J()
    minus_2i = GaussianRational(0, -2)
    basis = []
    for label in V_BASIS_LABELS:
        v = Multivector.scalar(ONE)
        for tok in label.split("^"):
            v = v ^ canonical_form(tok)
        if J.apply(v) != v.scale(minus_2i):
            raise AssertionError(f"{label} is not a J-eigenvector with eigenvalue -2i")
        basis.append(v)
    span = VectorSpan([VectorOf(v) for v in basis])
    if span.dim != 6:
        raise AssertionError("basis of V is not independent")
    return SubrepV(tuple(basis), span)


def restrict(t: Operator, V: SubrepV | None = None) -> Matrix6:
    """Matrix of ``t`` on V in the ordered basis; raises NotInvariant otherwise."""
    V = V or v_subspace()
    cols = []
    for h, b in enumerate(V.basis, start=1):
        m = V.coordinates(t.apply(b))
        if not m.member:
            raise NotInvariant(t.name or "?", h, _residual_mv(m.residual))
        cols.append(m.coefficients)
    return Matrix6([[cols[c][r] for c in range(6)] for r in range(6)])


# -- golden matrices ------------------------------------------------------------

def _parse_matrix_blocks(text: str) -> dict[str, Matrix6]:
    out: dict[str, Matrix6] = {}
    name = None
    rows: list = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            if name is not None:
                out[name] = Matrix6(rows)
            name, rows = line[1:-1], []
        else:
            rows.append([parse_scalar(tok) for tok in line.split()])
    if name is not None:
        out[name] = Matrix6(rows)
    return out


@lru_cache(maxsize=None)
def golden_matrices() -> dict[str, Matrix6]:
    text = resources.files("wsdalg").joinpath("data/restricted_generators.txt").read_text()
    return _parse_matrix_blocks(text)


@dataclass
class MatrixCheck:
    name: str
    passed: bool
    difference: tuple | None = None

    @property
    def witness(self) -> str | None:
        if self.difference is None:
            return None
        r, c, got, want = self.difference
        return f"entry ({r},{c}): computed {got}, expected {want}"


def verify_generator_matrices() -> list[MatrixCheck]:
    """Compare the restriction of each generator with the transcribed table."""
    golden = golden_matrices()
    out = []
    for name in GENERATOR_NAMES:
        got = restrict(get_operator(name))
        diff = got.first_difference(golden[name])
        out.append(MatrixCheck(name, diff is None, diff))
    return out


@dataclass
class RestrictionKernel:
    dim_algebra: int
    image_rank: int
    kernel_dim: int
    traceless: bool


def restriction_kernel(L: VectorSpan, V: SubrepV | None = None) -> RestrictionKernel:
    """Dimension of the kernel of restriction to V on the span ``L``."""
    V = V or v_subspace()
    mats = [restrict(t, V) for t in L.basis]
    rank = VectorSpan(mats, track=False).dim
    return RestrictionKernel(
        dim_algebra=L.dim,
        image_rank=rank,
        kernel_dim=L.dim - rank,
        traceless=all(not m.trace() for m in mats),
    )
