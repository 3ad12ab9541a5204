"""Extended rationals and decorated numbers.

Every endpoint in this package is an exact rational or one of the two
infinities.  A *decorated* value additionally records whether an interval
endpoint is open or closed, following the convention

    (a, b]  ->  (a+, b+)        [a, b]  ->  (a-, b+)
    (a, b)  ->  (a+, b-)        [a, b)  ->  (a-, b-)

so that ``a- < a+`` and a point ``x`` lies in ``(lo, hi)`` exactly when
``lo < x+`` and ``x- < hi``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Tuple, Union

__all__ = [
    "INF",
    "NEG_INF",
    "Infinity",
    "Ext",
    "to_ext",
    "is_finite",
    "ext_str",
    "Decoration",
    "MINUS",
    "PLUS",
    "DecoratedValue",
    "DecoratedPoint",
    "compare",
    "add",
    "u",
    "alpha_stats",
]


class Infinity:
    """One of the two signed infinities; use the module constants."""

    __slots__ = ("sign",)

    def __init__(self, sign: int):
        self.sign = sign

    def __repr__(self):
        return "INF" if self.sign > 0 else "NEG_INF"

    def __str__(self):
        return "inf" if self.sign > 0 else "-inf"

    def __hash__(self):
        return hash(("ext-infinity", self.sign))

    def __eq__(self, other):
        return isinstance(other, Infinity) and other.sign == self.sign

    def _key(self, other):
        if isinstance(other, Infinity):
            return other.sign
        if isinstance(other, Rational):
            return 0
        return None

    def __lt__(self, other):
        k = self._key(other)
        if k is None:
            return NotImplemented
        return self.sign < k

    def __le__(self, other):
        k = self._key(other)
        if k is None:
            return NotImplemented
        return self.sign <= k

    def __gt__(self, other):
        k = self._key(other)
        if k is None:
            return NotImplemented
        return self.sign > k

    def __ge__(self, other):
        k = self._key(other)
        if k is None:
            return NotImplemented
        return self.sign >= k

    def __neg__(self):
        return NEG_INF if self.sign > 0 else INF

    def __add__(self, other):
        if isinstance(other, Infinity):
            if other.sign != self.sign:
                raise ArithmeticError("inf - inf is undefined")
            return self
        if isinstance(other, Rational):
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (Infinity, Rational)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (Infinity, Rational)):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Rational):
            if other > 0:
                return self
            if other < 0:
                return -self
            raise ArithmeticError("0 * inf is undefined")
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Rational) and other != 0:
            return self * (1 if other > 0 else -1)
        return NotImplemented


INF = Infinity(1)
NEG_INF = Infinity(-1)

Ext = Union[Fraction, Infinity]


def to_ext(x) -> Ext:
    """Coerce ints, Fractions, ``"p/q"`` strings and ``"inf"`` to an extended rational.

    Floats are rejected: all arithmetic here is exact.
    """
    if isinstance(x, Infinity):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip().replace("−", "-")
        if s in ("inf", "+inf", "oo", "∞", "+∞"):
            return INF
        if s in ("-inf", "-oo", "-∞"):
            return NEG_INF
        return Fraction(s)
    raise TypeError(f"cannot interpret {x!r} as an exact extended rational")


def is_finite(x: Ext) -> bool:
    return not isinstance(x, Infinity)


def ext_str(x: Ext) -> str:
    """Canonical text form: ``"3"``, ``"-7/2"``, ``"inf"``."""
    return str(x)


class Decoration(enum.IntEnum):
    MINUS = 0
    PLUS = 1

    def __str__(self):
        return "+" if self is Decoration.PLUS else "-"


MINUS = Decoration.MINUS
PLUS = Decoration.PLUS


@dataclass(frozen=True)
class DecoratedValue:
    """An extended rational tagged with a decoration ``-`` or ``+``.

    ``-inf`` only ever carries ``+`` and ``+inf`` only ``-``.
    """

    value: Ext
    decoration: Decoration

    def __post_init__(self):
        if type(self.value) is not Fraction:
            object.__setattr__(self, "value", to_ext(self.value))
        if type(self.decoration) is not Decoration:
            object.__setattr__(self, "decoration", Decoration(self.decoration))
        if type(self.value) is Infinity:
            if self.value == NEG_INF and self.decoration is not PLUS:
                raise ValueError("-inf must be decorated with +")
            if self.value == INF and self.decoration is not MINUS:
                raise ValueError("+inf must be decorated with -")

    @classmethod
    def of(cls, value, plus: bool) -> DecoratedValue:
        return cls(value, PLUS if plus else MINUS)

    @property
    def is_plus(self) -> bool:
        return self.decoration is PLUS

    @property
    def finite(self) -> bool:
        return is_finite(self.value)

    def _key(self) -> Tuple[Ext, int]:
        return (self.value, int(self.decoration))

    def __lt__(self, other: DecoratedValue) -> bool:
        return self._key() < other._key()

    def __le__(self, other: DecoratedValue) -> bool:
        return self._key() <= other._key()

    def __gt__(self, other: DecoratedValue) -> bool:
        return self._key() > other._key()

    def __ge__(self, other: DecoratedValue) -> bool:
        return self._key() >= other._key()

    def __add__(self, t) -> DecoratedValue:
        return add(self, t)

    def __sub__(self, t) -> DecoratedValue:
        return add(self, -Fraction(t))

    def __str__(self):
        return f"{self.value}{self.decoration}"


def compare(x: DecoratedValue, y: DecoratedValue) -> int:
    """Three-way comparison: -1, 0 or 1."""
    kx, ky = x._key(), y._key()
    return (kx > ky) - (kx < ky)


def add(x: DecoratedValue, t) -> DecoratedValue:
    """Translate by a finite rational; the decoration is kept and infinities absorb."""
    t = Fraction(t)
    return DecoratedValue(x.value + t, x.decoration)


def u(x: DecoratedValue) -> Fraction:
    """Underlying value, with both infinities sent to 0."""
    return x.value if x.finite else Fraction(0)


@dataclass(frozen=True)
class DecoratedPoint:
    """A tuple of decorated values, ordered coordinatewise."""

    coords: Tuple[DecoratedValue, ...]

    def __post_init__(self):
        coords = tuple(self.coords)
        if not coords:
            raise ValueError("a decorated point needs at least one coordinate")
        object.__setattr__(self, "coords", coords)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __len__(self):
        return len(self.coords)

    def __le__(self, other: DecoratedPoint) -> bool:
        _check_dim(self, other)
        return all(a <= b for a, b in zip(self.coords, other.coords))

    def __ge__(self, other: DecoratedPoint) -> bool:
        return other <= self

    def shifted(self, t) -> DecoratedPoint:
        return DecoratedPoint(tuple(add(c, t) for c in self.coords))

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def _check_dim(p: DecoratedPoint, q: DecoratedPoint):
    if p.dim != q.dim:
        raise ValueError(f"dimension mismatch: {p.dim} vs {q.dim}")


def alpha_stats(p: DecoratedPoint | Iterable[DecoratedValue]) -> Tuple[Fraction, int]:
    """Return ``(sum of u over coordinates, number of + decorations)``."""
    coords = list(p)
    return sum((u(c) for c in coords), Fraction(0)), sum(1 for c in coords if c.is_plus)
