"""Exact scalars in the Gaussian rationals Q(i).

Every constant that shows up in the operator algebra (the 1/2 and 2 entries of
the restricted matrices, the factors of ``i`` relating the real coframe to the
complex one) lives in Q(i), so nothing here ever touches a float.

Text grammar (used by the CLI and the golden data files)::

    0   -1/2   2*i   1/2-3/4*i   -1*i

A denominator of 1 is omitted; the imaginary part is always written with an
explicit coefficient.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Union

__all__ = [
    "GaussianRational",
    "ZeroDenominator",
    "DivisionByZero",
    "normalize",
    "conjugate",
    "parse_scalar",
    "I",
    "ONE",
    "ZERO",
    "common_denominator",
]


class ZeroDenominator(ValueError):
    """A rational component was given with denominator zero."""


class DivisionByZero(ZeroDivisionError):
    """Division by the zero Gaussian rational."""


Scalar = Union["GaussianRational", int, Fraction]


class GaussianRational:
    """An exact complex number ``re + im*i`` with rational parts.

    Instances are immutable and hashable. Both parts are kept as
    :class:`fractions.Fraction`, which already enforces lowest terms with a
    positive denominator, so two equal values are always structurally equal.
    """

    __slots__ = ("_re", "_im")

    def __init__(self, re: Scalar = 0, im: Scalar = 0):
        if isinstance(re, GaussianRational) or isinstance(im, GaussianRational):
            raise TypeError("components must be rational, not Gaussian")
        self._re = Fraction(re)
        self._im = Fraction(im)

    # -- components ------------------------------------------------------
    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    @property
    def re_num(self) -> int:
        return self._re.numerator

    @property
    def re_den(self) -> int:
        return self._re.denominator

    @property
    def im_num(self) -> int:
        return self._im.numerator

    @property
    def im_den(self) -> int:
        return self._im.denominator

    # -- coercion --------------------------------------------------------
    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        if isinstance(value, str):
            return parse_scalar(value)
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")

    def as_integer_ratio(self) -> tuple[tuple[int, int], int]:
        """Return ``((a, b), d)`` with ``self == (a + b*i) / d`` and ``d > 0`` minimal."""
        d = self._re.denominator * self._im.denominator // gcd(
            self._re.denominator, self._im.denominator
        )
        return (self._re.numerator * (d // self._re.denominator),
                self._im.numerator * (d // self._im.denominator)), d

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self._re + o._re, self._im + o._im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self._re - o._re, self._im - o._im)

    def __rsub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(
            self._re * o._re - self._im * o._im,
            self._re * o._im + self._im * o._re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        n = o._re * o._re + o._im * o._im
        if n == 0:
            raise DivisionByZero("division by zero in Q(i)")
        # a / b = a * conj(b) / |b|^2
        return GaussianRational(
            (self._re * o._re + self._im * o._im) / n,
            (self._im * o._re - self._re * o._im) / n,
        )

    def __rtruediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self._re, -self._im)

    def __pos__(self):
        return self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self._re, -self._im)

    def norm(self) -> Fraction:
        """Squared modulus ``re**2 + im**2``."""
        return self._re * self._re + self._im * self._im

    def __bool__(self):
        return bool(self._re) or bool(self._im)

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self._re == o._re and self._im == o._im

    def __hash__(self):
        if not self._im:
            return hash(self._re)
        return hash((self._re, self._im))

    # -- text ------------------------------------------------------------
    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"

    def to_json(self) -> dict:
        return {"re": _fmt_fraction(self._re), "im": _fmt_fraction(self._im)}

    @classmethod
    def from_json(cls, obj: Mapping[str, str]) -> "GaussianRational":
        return cls(_parse_fraction(obj["re"]), _parse_fraction(obj["im"]))


def normalize(re_num: int, re_den: int, im_num: int, im_den: int) -> GaussianRational:
    """Build the canonical value ``re_num/re_den + (im_num/im_den)*i``."""
    if re_den == 0 or im_den == 0:
        raise ZeroDenominator("denominator must be nonzero")
    return GaussianRational(Fraction(re_num, re_den), Fraction(im_num, im_den))


def conjugate(a: GaussianRational) -> GaussianRational:
    return a.conjugate()


def common_denominator(values: Iterable[GaussianRational]) -> int:
    """Least common multiple of all component denominators (1 for an empty input)."""
    d = 1
    for v in values:
        for q in (v.re_den, v.im_den):
            d = d * q // gcd(d, q)
    return d


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def _fmt_fraction(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _parse_fraction(text: str) -> Fraction:
    num, _, den = text.strip().partition("/")
    if den and int(den) == 0:
        raise ZeroDenominator(text)
    return Fraction(int(num), int(den) if den else 1)


def format_scalar(a: GaussianRational) -> str:
    re_part, im_part = a.re, a.im
    if not im_part:
        return _fmt_fraction(re_part)
    im_txt = _fmt_fraction(abs(im_part)) + "*i"
    if not re_part:
        return ("-" if im_part < 0 else "") + im_txt
    return _fmt_fraction(re_part) + ("-" if im_part < 0 else "+") + im_txt


_RAT = r"\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^(?P<re>[+-]?{_RAT})?"
    rf"(?:(?P<isign>^[+-]?|[+-])(?P<im>{_RAT})?\*?i)?$"
)


def parse_scalar(text: str) -> GaussianRational:
    """Parse the canonical grammar; also accepts ``i``/``-i`` without a coefficient."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    m = _SCALAR_RE.match(s)
    if m is None or (m.group("re") is None and m.group("isign") is None):
        raise ValueError(f"not a Gaussian rational: {text!r}")
    re_part = _parse_fraction(m.group("re")) if m.group("re") else Fraction(0)
    im_part = Fraction(0)
    if m.group("isign") is not None:
        im_part = _parse_fraction(m.group("im")) if m.group("im") else Fraction(1)
        if m.group("isign") == "-":
            im_part = -im_part
    return GaussianRational(re_part, im_part)
