"""Exact linear endomorphisms of the 64-dimensional exterior algebra.

An :class:`Operator` stores a sparse Gaussian-integer matrix together with one
positive integer denominator, kept in lowest terms. Keys are flat row-major
coordinates ``row * 64 + col``; the same flattening is the vectorization used
by spans, so pivots are "first nonzero entry in row-major order".
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Mapping

from .. import _kernels as K
from ..exterior import DIM, Multivector
from ..scalars import GaussianRational, ZERO

__all__ = ["Operator", "bracket", "trace", "adjoint"]


def _normalized(flat: dict, den: int) -> tuple[dict, int]:
    if not flat:
        return {}, 1
    g = gcd(K.content(flat), den)
    if g > 1:
        flat = K.divide(flat, g)
        den //= g
    return flat, den


class Operator:
    """Immutable sparse 64x64 matrix over Q(i)."""

    __slots__ = ("_flat", "_den", "name")

    def __init__(self, flat: Mapping[int, tuple[int, int]] | None = None, den: int = 1,
                 name: str | None = None):
        if den <= 0:
            raise ValueError("denominator must be positive")
        cleaned = {k: (int(re), int(im)) for k, (re, im) in (flat or {}).items() if re or im}
        self._flat, self._den = _normalized(cleaned, den)
        self.name = name

    @classmethod
    def _raw(cls, flat: dict, den: int, name: str | None = None) -> "Operator":
        op = cls.__new__(cls)
        op._flat, op._den = _normalized(flat, den)
        op.name = name
        return op

    # -- constructors ----------------------------------------------------
    @classmethod
    def zero(cls) -> "Operator":
        return cls._raw({}, 1, "0")

    @classmethod
    def identity(cls) -> "Operator":
        return cls._raw({r * DIM + r: (1, 0) for r in range(DIM)}, 1, "Id")

    @classmethod
    def from_entries(cls, entries: Mapping[tuple[int, int], object], name=None) -> "Operator":
        """Build from ``{(row, col): scalar}`` with arbitrary Gaussian-rational values."""
        vals = {k: GaussianRational.coerce(v) for k, v in entries.items()}
        den = 1
        for v in vals.values():
            _, d = v.as_integer_ratio()
            den = den * d // gcd(den, d)
        flat = {}
        for (r, c), v in vals.items():
            if not (0 <= r < DIM and 0 <= c < DIM):
                raise ValueError(f"entry ({r}, {c}) out of range")
            (a, b), d = v.as_integer_ratio()
            m = den // d
            if a or b:
                flat[r * DIM + c] = (a * m, b * m)
        return cls._raw(flat, den, name)

    @classmethod
    def from_column_map(cls, column: Callable[[int], Multivector], name=None) -> "Operator":
        """Build from the images of the 64 basis monomials."""
        entries = {}
        for c in range(DIM):
            for r, v in column(c).items():
                entries[(r, c)] = v
        return cls.from_entries(entries, name)

    # -- access ----------------------------------------------------------
    @property
    def den(self) -> int:
        return self._den

    @property
    def flat(self) -> dict:
        """Numerator entries keyed by ``row * 64 + col`` (do not mutate)."""
        return self._flat

    @property
    def nnz(self) -> int:
        return len(self._flat)

    def entry(self, r: int, c: int) -> GaussianRational:
        v = self._flat.get(r * DIM + c)
        if v is None:
            return ZERO
        return GaussianRational(Fraction(v[0], self._den), Fraction(v[1], self._den))

    def entries(self) -> dict[tuple[int, int], GaussianRational]:
        return {divmod(k, DIM): self.entry(*divmod(k, DIM)) for k in sorted(self._flat)}

    def dense(self) -> list[list[GaussianRational]]:
        return [[self.entry(r, c) for c in range(DIM)] for r in range(DIM)]

    def is_zero(self) -> bool:
        return not self._flat

    def named(self, name: str) -> "Operator":
        return Operator._raw(self._flat, self._den, name)

    # -- algebra ---------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        return self._den == other._den and self._flat == other._flat

    def __hash__(self):
        return hash((self._den, frozenset(self._flat.items())))

    def __add__(self, other: "Operator") -> "Operator":
        if not isinstance(other, Operator):
            return NotImplemented
        return Operator._raw(
            K.lincomb(self._flat, (other._den, 0), other._flat, (self._den, 0)),
            self._den * other._den,
        )

    def __sub__(self, other: "Operator") -> "Operator":
        if not isinstance(other, Operator):
            return NotImplemented
        return Operator._raw(
            K.lincomb(self._flat, (other._den, 0), other._flat, (-self._den, 0)),
            self._den * other._den,
        )

    def __neg__(self) -> "Operator":
        return Operator._raw({k: (-a, -b) for k, (a, b) in self._flat.items()}, self._den)

    def scale(self, c) -> "Operator":
        c = GaussianRational.coerce(c)
        (a, b), d = c.as_integer_ratio()
        if not (a or b):
            return Operator.zero()
        return Operator._raw(K.lincomb(self._flat, (a, b), {}, (0, 0)), self._den * d)

    def __rmul__(self, c) -> "Operator":
        return self.scale(c)

    def __mul__(self, c) -> "Operator":
        if isinstance(c, Operator):
            return NotImplemented
        return self.scale(c)

    def __matmul__(self, other: "Operator") -> "Operator":
        """Composition ``self o other``."""
        if not isinstance(other, Operator):
            return NotImplemented
        return Operator._raw(K.matmul(self._flat, other._flat, DIM), self._den * other._den)

    def bracket(self, other: "Operator") -> "Operator":
        ab = K.matmul(self._flat, other._flat, DIM)
        ba = K.matmul(other._flat, self._flat, DIM)
        return Operator._raw(K.lincomb(ab, (1, 0), ba, (-1, 0)), self._den * other._den)

    def adjoint(self) -> "Operator":
        """Conjugate transpose; the monomial basis is orthonormal."""
        out = {}
        for k, (a, b) in self._flat.items():
            r, c = divmod(k, DIM)
            out[c * DIM + r] = (a, -b)
        return Operator._raw(out, self._den)

    def trace(self) -> GaussianRational:
        re = im = 0
        for r in range(DIM):
            v = self._flat.get(r * DIM + r)
            if v is not None:
                re += v[0]
                im += v[1]
        return GaussianRational(Fraction(re, self._den), Fraction(im, self._den))

    def apply(self, phi: Multivector) -> Multivector:
        out: dict[int, GaussianRational] = {}
        by_col: dict[int, list] = {}
        for k, v in self._flat.items():
            r, c = divmod(k, DIM)
            by_col.setdefault(c, []).append((r, v))
        for c, x in phi.items():
            for r, (a, b) in by_col.get(c, ()):
                e = GaussianRational(Fraction(a, self._den), Fraction(b, self._den))
                out[r] = out.get(r, ZERO) + e * x
        return Multivector(out)

    def __call__(self, phi: Multivector) -> Multivector:
        return self.apply(phi)

    def __repr__(self):
        label = self.name or "?"
        return f"<Operator {label} nnz={len(self._flat)} den={self._den}>"


def bracket(a: Operator, b: Operator) -> Operator:
    return a.bracket(b)


def trace(a: Operator) -> GaussianRational:
    return a.trace()


def adjoint(a: Operator) -> Operator:
    return a.adjoint()


def lincomb(terms: Iterable[tuple[object, Operator]]) -> Operator:
    """Sum of ``c * T`` over ``(c, T)`` pairs."""
    total = Operator.zero()
    for c, t in terms:
        total = total + t.scale(c)
    return total
