"""Exterior algebra on the six coframe generators ``v_ij`` (i in {1,2}, j in {0,1,2}).

Monomials are 6-bit masks. Bit ``b`` stands for generator ``GENERATORS[b]``;
the order is column-major, ``v10 < v20 < v11 < v21 < v12 < v22``, so the
column index of bit ``b`` is ``b // 2`` and the multidegree of a monomial is a
per-column popcount.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .scalars import GaussianRational, ONE, ZERO, format_scalar, parse_scalar

__all__ = [
    "GeneratorIndex",
    "GENERATORS",
    "DIM",
    "bit_of",
    "degree",
    "wedge_monomials",
    "contract_monomial",
    "sequence_sign",
    "mdeg_of_monomial",
    "format_monomial",
    "parse_monomial",
    "Multivector",
    "apply_E",
    "apply_I",
]

DIM = 64


@dataclass(frozen=True, order=True)
class GeneratorIndex:
    i: int
    j: int

    def __post_init__(self):
        if self.i not in (1, 2) or self.j not in (0, 1, 2):
            raise ValueError(f"no generator v{self.i}{self.j}")

    @property
    def bit(self) -> int:
        return 2 * self.j + (self.i - 1)

    def __str__(self):
        return f"v{self.i}{self.j}"


GENERATORS: tuple[GeneratorIndex, ...] = tuple(
    GeneratorIndex(i, j) for j in range(3) for i in (1, 2)
)


def bit_of(g) -> int:
    """Bit position of a generator given as GeneratorIndex, ``(i, j)`` or bit."""
    if isinstance(g, GeneratorIndex):
        return g.bit
    if isinstance(g, tuple):
        return GeneratorIndex(*g).bit
    if isinstance(g, int) and 0 <= g < 6:
        return g
    raise ValueError(f"bad generator {g!r}")


def degree(mask: int) -> int:
    return bin(mask).count("1")


def wedge_monomials(a: int, b: int) -> tuple[int, int]:
    """``(sign, a | b)`` with ``mono(a) ^ mono(b) = sign * mono(a | b)``."""
    if a & b:
        return 0, 0
    swaps = 0
    rest = b
    while rest:
        low = rest & -rest
        # every generator of ``a`` above ``low`` has to be jumped over
        swaps += degree(a & ~((low << 1) - 1))
        rest ^= low
    return (-1 if swaps & 1 else 1), a | b


def contract_monomial(g, a: int) -> tuple[int, int]:
    """Interior product of ``d/dv_g`` into the monomial ``a``."""
    b = bit_of(g)
    if not (a >> b) & 1:
        return 0, 0
    pos = degree(a & ((1 << b) - 1))
    return (-1 if pos & 1 else 1), a & ~(1 << b)


def sequence_sign(bits: Iterable[int]) -> tuple[int, int]:
    """Sign and mask of the wedge of generators listed in an arbitrary order.

    Brute-force inversion count; independent of the mask tricks above and used
    to cross-check them.
    """
    seq = list(bits)
    if len(set(seq)) != len(seq):
        return 0, 0
    inversions = sum(
        1 for x in range(len(seq)) for y in range(x + 1, len(seq)) if seq[x] > seq[y]
    )
    mask = 0
    for s in seq:
        mask |= 1 << s
    return (-1 if inversions & 1 else 1), mask


def bits_of(mask: int) -> list[int]:
    return [b for b in range(6) if (mask >> b) & 1]


def mdeg_of_monomial(mask: int) -> tuple[int, int, int]:
    return tuple(degree(mask & (0b11 << (2 * j))) for j in range(3))


def format_monomial(mask: int) -> str:
    if mask == 0:
        return "1"
    return "^".join(str(GENERATORS[b]) for b in bits_of(mask))


def parse_monomial(text: str) -> tuple[int, int]:
    """Parse ``v10^v20^...`` in any order; returns ``(sign, mask)``."""
    text = text.strip()
    if text == "1":
        return 1, 0
    bits = []
    for tok in text.split("^"):
        tok = tok.strip()
        if len(tok) != 3 or tok[0] != "v":
            raise ValueError(f"bad generator token {tok!r}")
        bits.append(GeneratorIndex(int(tok[1]), int(tok[2])).bit)
    return sequence_sign(bits)


class Multivector:
    """Sparse element of the complexified exterior algebra (dimension 64)."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        clean = {}
        for mask, c in (coeffs or {}).items():
            if not 0 <= mask < DIM:
                raise ValueError(f"mask {mask} out of range")
            c = GaussianRational.coerce(c)
            if c:
                clean[mask] = c
        self._coeffs = clean

    @classmethod
    def monomial(cls, mask: int, coeff=ONE) -> "Multivector":
        return cls({mask: coeff})

    @classmethod
    def generator(cls, g) -> "Multivector":
        return cls({1 << bit_of(g): ONE})

    @classmethod
    def scalar(cls, c) -> "Multivector":
        return cls({0: c})

    @property
    def coeffs(self) -> dict[int, GaussianRational]:
        return dict(self._coeffs)

    def items(self) -> Iterator[tuple[int, GaussianRational]]:
        return iter(sorted(self._coeffs.items()))

    def __getitem__(self, mask: int) -> GaussianRational:
        return self._coeffs.get(mask, ZERO)

    def __len__(self):
        return len(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other: "Multivector") -> "Multivector":
        out = dict(self._coeffs)
        for m, c in other._coeffs.items():
            out[m] = out.get(m, ZERO) + c
        return Multivector(out)

    def __neg__(self):
        return Multivector({m: -c for m, c in self._coeffs.items()})

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self + (-other)

    def scale(self, c) -> "Multivector":
        c = GaussianRational.coerce(c)
        return Multivector({m: c * v for m, v in self._coeffs.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def wedge(self, other: "Multivector") -> "Multivector":
        out: dict[int, GaussianRational] = {}
        for a, ca in self._coeffs.items():
            for b, cb in other._coeffs.items():
                s, m = wedge_monomials(a, b)
                if s:
                    out[m] = out.get(m, ZERO) + (ca * cb if s > 0 else -(ca * cb))
        return Multivector(out)

    __xor__ = wedge

    def conjugate(self) -> "Multivector":
        return Multivector({m: c.conjugate() for m, c in self._coeffs.items()})

    def inner(self, other: "Multivector") -> GaussianRational:
        """Hermitian product, antilinear in the first slot; monomials orthonormal."""
        total = ZERO
        for m, c in self._coeffs.items():
            if m in other._coeffs:
                total = total + c.conjugate() * other._coeffs[m]
        return total

    def degrees(self) -> set[int]:
        return {degree(m) for m in self._coeffs}

    def __str__(self):
        if not self._coeffs:
            return "0"
        terms = []
        for m, c in self.items():
            mono = format_monomial(m)
            if mono == "1":
                terms.append(format_scalar(c))
            elif c == ONE:
                terms.append(mono)
            else:
                terms.append(f"({format_scalar(c)})*{mono}")
        return " + ".join(terms)

    def __repr__(self):
        return f"Multivector({self})"

    @classmethod
    def parse(cls, text: str) -> "Multivector":
        """Inverse of ``str``: terms ``mono`` / ``(c)*mono`` / ``c`` joined by `` + ``."""
        out = cls()
        if text.strip() == "0":
            return out
        for term in text.split(" + "):
            term = term.strip()
            if term.startswith("("):
                coeff_txt, _, mono = term[1:].partition(")*")
                c = parse_scalar(coeff_txt)
            elif term.startswith("v"):
                c, mono = ONE, term
            else:
                c, mono = parse_scalar(term), "1"
            s, m = parse_monomial(mono)
            out = out + cls.monomial(m, c * s)
        return out


def apply_E(g, phi: Multivector) -> Multivector:
    """Wedge from the left with the generator ``v_g``."""
    b = 1 << bit_of(g)
    out = {}
    for m, c in phi._coeffs.items():
        s, r = wedge_monomials(b, m)
        if s:
            out[r] = c if s > 0 else -c
    return Multivector(out)


def apply_I(g, phi: Multivector) -> Multivector:
    """Contract with the dual vector ``d/dv_g``."""
    out = {}
    for m, c in phi._coeffs.items():
        s, r = contract_monomial(g, m)
        if s:
            out[r] = c if s > 0 else -c
    return Multivector(out)
