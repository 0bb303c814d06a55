"""Echelonized exact spans, membership, and Lie closure.

Elements are anything exposing ``.flat`` (sparse Gaussian-integer vector keyed
by non-negative coordinates) and ``.den`` (positive int); the represented
vector is ``flat / den``. Rows are kept in forward echelon form with the pivot
at the first nonzero coordinate.

Coefficients are tracked without fractions: every row carries, under the
negative key ``-(m + 1)``, its coefficient on the numerator of member ``m``.
Elimination treats those keys like any other coordinate, so the relation
"main part = sum of tracked coefficient * member numerator" survives every
row operation.
"""

from __future__ import annotations

import bisect
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Generic, Iterable, Sequence, TypeVar

from .. import _kernels as K
from ..scalars import GaussianRational
from .operator import Operator

__all__ = [
    "Membership",
    "VectorSpan",
    "OperatorSpan",
    "ClosureNotReached",
    "span_closure",
    "lie_closure",
    "in_span",
    "same_span",
    "rank",
    "default_max_rounds",
]

T = TypeVar("T")


class ClosureNotReached(RuntimeError):
    """The bracket closure was still growing when the round budget ran out."""


def default_max_rounds() -> int:
    return int(os.environ.get("WSDALG_MAX_ROUNDS", "12"))


@dataclass
class Membership:
    member: bool
    coefficients: list[GaussianRational] | None = None
    residual: dict | None = None

    def __bool__(self):
        return self.member


def _gauss_ratio(num: tuple[int, int], den: tuple[int, int]) -> GaussianRational:
    return GaussianRational(num[0], num[1]) / GaussianRational(den[0], den[1])


class VectorSpan(Generic[T]):
    """Exact span of sparse vectors with membership and coefficient recovery."""

    def __init__(self, elements: Iterable[T] = (), track: bool = True):
        self._rows: list[tuple[int, dict]] = []
        self._pivots: list[int] = []
        self._members: list[T] = []
        self.track = track
        for e in elements:
            self.insert(e)

    # -- queries ---------------------------------------------------------
    @property
    def dim(self) -> int:
        return len(self._rows)

    def __len__(self):
        return len(self._rows)

    @property
    def pivots(self) -> list[int]:
        return list(self._pivots)

    @property
    def basis(self) -> list[T]:
        """Inserted independent elements, in insertion order."""
        return list(self._members)

    def _reduce(self, e, slot: int | None) -> dict:
        vec = dict(e.flat)
        if self.track and slot is not None:
            vec[-(slot + 1)] = (1, 0)
        return K.reduce(vec, self._rows)

    def contains(self, e) -> Membership:
        d = len(self._members)
        vec = self._reduce(e, d if self.track else None)
        if K.pivot(vec) is not None:
            return Membership(False, None, {k: v for k, v in vec.items() if k >= 0})
        if not self.track:
            return Membership(True)
        own = vec[-(d + 1)]
        coeffs = []
        for m, member in enumerate(self._members):
            c = vec.get(-(m + 1))
            if c is None:
                coeffs.append(GaussianRational(0))
            else:
                # e = u_e / d_e = -sum(c_m / own) * u_m / d_e, and u_m = d_m * member_m
                coeffs.append(-_gauss_ratio(c, own) * Fraction(member.den, e.den))
        return Membership(True, coeffs, None)

    def __contains__(self, e) -> bool:
        vec = self._reduce(e, None)
        return K.pivot(vec) is None

    def insert(self, e: T) -> bool:
        """Add ``e`` if it is independent of the current span; report whether it was."""
        vec = self._reduce(e, len(self._members) if self.track else None)
        p = K.pivot(vec)
        if p is None:
            return False
        i = bisect.bisect_left(self._pivots, p)
        self._pivots.insert(i, p)
        self._rows.insert(i, (p, vec))
        self._members.append(e)
        return True

    def extend(self, elements: Iterable[T]) -> int:
        return sum(1 for e in elements if self.insert(e))

    def issubspace(self, other: "VectorSpan") -> bool:
        return all(m in other for m in self._members)


class OperatorSpan(VectorSpan[Operator]):
    """Span of 64x64 operators vectorized row-major into 4096 coordinates."""

    @property
    def names(self) -> list[str]:
        return [m.name or "?" for m in self._members]

    def combination(self, coeffs: Sequence[GaussianRational]) -> Operator:
        total = Operator.zero()
        for c, m in zip(coeffs, self._members):
            if c:
                total = total + m.scale(c)
        return total


def rank(elements: Iterable) -> int:
    return VectorSpan(elements, track=False).dim


def in_span(t, span: VectorSpan) -> Membership:
    return span.contains(t)


def same_span(a: VectorSpan, b: VectorSpan) -> bool:
    """Mutual membership of bases."""
    return a.dim == b.dim and a.issubspace(b) and b.issubspace(a)


def lie_closure(
    generators: Sequence[T],
    bracket: Callable[[T, T], T],
    span: VectorSpan,
    max_rounds: int | None = None,
) -> VectorSpan:
    """Close ``span`` (seeded with ``generators``) under brackets with the generators.

    Each round brackets the elements added in the previous round against
    every generator; right-nested brackets of generators span the generated
    Lie algebra, so this reaches closure. Insertion order depends only on the
    round, element, and generator indices.
    """
    if not generators:
        raise ValueError("need at least one generator")
    if max_rounds is None:
        max_rounds = default_max_rounds()
    if max_rounds < 1:
        raise ValueError("max_rounds must be >= 1")
    frontier = [g for g in generators if span.insert(g)]
    rounds = 0
    while frontier:
        if rounds == max_rounds:
            raise ClosureNotReached(
                f"dimension {span.dim} still growing after {max_rounds} rounds"
            )
        rounds += 1
        grown = []
        for x in frontier:
            for g in generators:
                c = bracket(x, g)
                if span.insert(c):
                    grown.append(c)
        frontier = grown
    span.rounds = rounds
    return span


def span_closure(generators: Sequence[Operator], max_rounds: int | None = None) -> OperatorSpan:
    """Lie algebra generated by 64x64 operators (the trusted 4096-coordinate path)."""

    def br(x: Operator, g: Operator) -> Operator:
        out = x.bracket(g)
        out.name = f"[{x.name or '?'},{g.name or '?'}]"
        return out

    return lie_closure(list(generators), br, OperatorSpan(), max_rounds)
