"""Canonical forms and operators at a point of a rank-2 WSD manifold.

Everything is built in the adapted coframe ``v_ij``: the three 2-forms, the
wedge operators ``L_j`` and ``V_j``, their adjoints ``Lam_j`` and ``A_j``, the
rotation generator ``J``, the complexified wedge/contraction operators along
``w_j = v_1j + i v_2j`` and ``wbar_j = v_1j - i v_2j``, and the action of the
symmetric group S3 permuting the column index ``j``.

Operators are cached; all of them are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .exterior import (
    DIM,
    GENERATORS,
    GeneratorIndex,
    Multivector,
    bit_of,
    bits_of,
    contract_monomial,
    sequence_sign,
    wedge_monomials,
)
from .lie.operator import Operator
from .scalars import GaussianRational, I, ONE

__all__ = [
    "ConstructionMismatch",
    "canonical_form",
    "FORM_NAMES",
    "E",
    "I_op",
    "wedge_operator",
    "build_L",
    "build_V",
    "adjoint_ops",
    "build_J",
    "build_J_derivation",
    "build_J_formula",
    "build_w_ops",
    "PermutationS3",
    "S3",
    "permutation_operator",
    "s3_conjugate",
    "generators",
    "GENERATOR_NAMES",
    "registry_names",
    "get_operator",
    "UnknownOperator",
]


class ConstructionMismatch(AssertionError):
    """Two independent constructions of the same operator disagree."""


class UnknownOperator(KeyError):
    pass


def _v(i: int, j: int) -> Multivector:
    return Multivector.generator((i, j))


FORM_NAMES = (
    "omega1", "omega2", "omegaD",
    "w0", "w1", "w2", "wbar0", "wbar1", "wbar2",
    "vol0", "vol1", "vol2",
)


@lru_cache(maxsize=None)
def canonical_form(name: str) -> Multivector:
    if name == "omega1":
        return (_v(1, 0) ^ _v(1, 1)) + (_v(2, 0) ^ _v(2, 1))
    if name == "omega2":
        return (_v(1, 0) ^ _v(1, 2)) + (_v(2, 0) ^ _v(2, 2))
    if name == "omegaD":
        return (_v(1, 1) ^ _v(1, 2)) + (_v(2, 1) ^ _v(2, 2))
    if name.startswith("wbar"):
        j = int(name[4:])
        return _v(1, j) - _v(2, j).scale(I)
    if name.startswith("w"):
        j = int(name[1:])
        return _v(1, j) + _v(2, j).scale(I)
    if name.startswith("vol"):
        j = int(name[3:])
        return _v(1, j) ^ _v(2, j)
    raise KeyError(name)


# -- non-canonical wedge / contraction --------------------------------------

@lru_cache(maxsize=None)
def E(i: int, j: int) -> Operator:
    """Wedge with ``v_ij``."""
    b = 1 << GeneratorIndex(i, j).bit
    entries = {}
    for c in range(DIM):
        s, r = wedge_monomials(b, c)
        if s:
            entries[(r, c)] = s
    return Operator.from_entries(entries, name=f"E{i}{j}")


@lru_cache(maxsize=None)
def I_op(i: int, j: int) -> Operator:
    """Contraction with ``d/dv_ij``."""
    g = GeneratorIndex(i, j)
    entries = {}
    for c in range(DIM):
        s, r = contract_monomial(g, c)
        if s:
            entries[(r, c)] = s
    return Operator.from_entries(entries, name=f"I{i}{j}")


def wedge_operator(form: Multivector, name: str | None = None) -> Operator:
    """Left multiplication by a fixed form."""
    return Operator.from_column_map(lambda c: form.wedge(Multivector.monomial(c)), name)


# -- canonical operators -----------------------------------------------------

_L_FORMS = {0: ("omegaD", 1), 1: ("omega2", -1), 2: ("omega1", 1)}


@lru_cache(maxsize=None)
def build_L(j: int) -> Operator:
    form, sign = _L_FORMS[j]
    return wedge_operator(canonical_form(form).scale(sign), name=f"L{j}")


@lru_cache(maxsize=None)
def build_V(j: int) -> Operator:
    return (E(1, j) @ E(2, j)).named(f"V{j}")


@lru_cache(maxsize=None)
def adjoint_ops(j: int) -> tuple[Operator, Operator]:
    """``(Lam_j, A_j)``, the Hermitian adjoints of ``L_j`` and ``V_j``."""
    return build_L(j).adjoint().named(f"Lam{j}"), build_V(j).adjoint().named(f"A{j}")


def _j_on_generator(b: int) -> tuple[int, int]:
    """``J`` on a single coframe vector: ``v_1j -> v_2j``, ``v_2j -> -v_1j``."""
    g = GENERATORS[b]
    if g.i == 1:
        return 1, GeneratorIndex(2, g.j).bit
    return -1, GeneratorIndex(1, g.j).bit


@lru_cache(maxsize=None)
def build_J_derivation() -> Operator:
    """``J`` extended from 1-forms to all forms by the Leibniz rule."""
    entries: dict[tuple[int, int], int] = {}
    for c in range(DIM):
        seq = bits_of(c)
        for pos, b in enumerate(seq):
            s1, nb = _j_on_generator(b)
            s2, r = sequence_sign(seq[:pos] + [nb] + seq[pos + 1:])
            if s2:
                entries[(r, c)] = entries.get((r, c), 0) + s1 * s2
    return Operator.from_entries(entries, name="J")


@lru_cache(maxsize=None)
def build_J_formula() -> Operator:
    """``J = sum_j (E_2j I_1j - E_1j I_2j)``."""
    total = Operator.zero()
    for j in range(3):
        total = total + (E(2, j) @ I_op(1, j)) - (E(1, j) @ I_op(2, j))
    return total.named("J")


@lru_cache(maxsize=None)
def build_J() -> Operator:
    a, b = build_J_derivation(), build_J_formula()
    if a != b:
        raise ConstructionMismatch("derivation and E/I constructions of J differ")
    return a


@lru_cache(maxsize=None)
def build_w_ops(j: int) -> tuple[Operator, Operator, Operator, Operator]:
    """``(E_wj, E_wbarj, I_wj, I_wbarj)``."""
    e1, e2, i1, i2 = E(1, j), E(2, j), I_op(1, j), I_op(2, j)
    return (
        (e1 + e2.scale(I)).named(f"Ew{j}"),
        (e1 - e2.scale(I)).named(f"Ewbar{j}"),
        (i1 - i2.scale(I)).named(f"Iw{j}"),
        (i1 + i2.scale(I)).named(f"Iwbar{j}"),
    )


# -- S3 ----------------------------------------------------------------------

@dataclass(frozen=True)
class PermutationS3:
    """A permutation ``sigma`` of {0, 1, 2}, stored as its images."""

    images: tuple[int, int, int]

    def __post_init__(self):
        if sorted(self.images) != [0, 1, 2]:
            raise ValueError(f"not a permutation: {self.images}")

    def __call__(self, j: int) -> int:
        return self.images[j]

    @property
    def sign(self) -> int:
        return sequence_sign(self.images)[0]

    def inverse(self) -> "PermutationS3":
        inv = [0, 0, 0]
        for a, b in enumerate(self.images):
            inv[b] = a
        return PermutationS3(tuple(inv))

    def __mul__(self, other: "PermutationS3") -> "PermutationS3":
        return PermutationS3(tuple(self(other(j)) for j in range(3)))

    @classmethod
    def transposition(cls, a: int, b: int) -> "PermutationS3":
        img = [0, 1, 2]
        img[a], img[b] = b, a
        return cls(tuple(img))

    def __str__(self):
        return "".join(map(str, self.images))


S3: tuple[PermutationS3, ...] = tuple(PermutationS3(p) for p in permutations(range(3)))


@lru_cache(maxsize=None)
def permutation_operator(sigma: PermutationS3) -> Operator:
    """Algebra automorphism induced by ``v_ij -> v_i sigma(j)``."""
    entries = {}
    for c in range(DIM):
        images = []
        for b in bits_of(c):
            g = GENERATORS[b]
            images.append(GeneratorIndex(g.i, sigma(g.j)).bit)
        s, r = sequence_sign(images)
        entries[(r, c)] = s
    return Operator.from_entries(entries, name=f"P{sigma}")


def s3_conjugate(sigma: PermutationS3, t: Operator) -> Operator:
    p = permutation_operator(sigma)
    q = permutation_operator(sigma.inverse())
    return p @ t @ q


# -- registry ----------------------------------------------------------------

GENERATOR_NAMES = tuple(
    [f"L{j}" for j in range(3)]
    + [f"Lam{j}" for j in range(3)]
    + [f"V{j}" for j in range(3)]
    + [f"A{j}" for j in range(3)]
)


def generators() -> list[Operator]:
    """The twelve generators ``L_j, Lam_j, V_j, A_j`` in registry order."""
    return [get_operator(n) for n in GENERATOR_NAMES]


def _base_registry() -> dict:
    reg = {"Id": Operator.identity, "J": build_J}
    for j in range(3):
        reg[f"L{j}"] = lambda j=j: build_L(j)
        reg[f"V{j}"] = lambda j=j: build_V(j)
        reg[f"Lam{j}"] = lambda j=j: adjoint_ops(j)[0]
        reg[f"A{j}"] = lambda j=j: adjoint_ops(j)[1]
        for k, nm in enumerate(("Ew", "Ewbar", "Iw", "Iwbar")):
            reg[f"{nm}{j}"] = lambda j=j, k=k: build_w_ops(j)[k]
        for i in (1, 2):
            reg[f"E{i}{j}"] = lambda i=i, j=j: E(i, j)
            reg[f"I{i}{j}"] = lambda i=i, j=j: I_op(i, j)
    return reg


@lru_cache(maxsize=None)
def _registry() -> dict:
    from . import cartan

    reg = _base_registry()
    reg.update(cartan.registry_entries())
    return reg


def registry_names() -> list[str]:
    return list(_registry())


def get_operator(name: str) -> Operator:
    try:
        builder = _registry()[name]
    except KeyError:
        raise UnknownOperator(name) from None
    return builder().named(name)
