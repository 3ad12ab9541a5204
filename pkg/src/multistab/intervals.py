"""The three supported interval classes and their elementary geometry.

* :class:`Rectangle` -- a product of decorated 1-D intervals in R^n.
* :class:`FreeInterval` -- an upset ``<p> = {q : q >= p}``.
* :class:`Triangle` -- ``{x < a, y < b} minus {x + y < 0}`` in R^2.

Shifting a triangle leaves the class (the antidiagonal moves), so shifted
triangles are represented by :class:`GeneralizedTriangle`
``{x < a, y < b, x + y >= c}``.  Rectangles and free intervals are closed
under shifts.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .decorated import (
    INF,
    MINUS,
    NEG_INF,
    PLUS,
    DecoratedPoint,
    DecoratedValue,
    Ext,
    alpha_stats,
    is_finite,
    to_ext,
    u,
)

__all__ = [
    "Rectangle",
    "FreeInterval",
    "Triangle",
    "GeneralizedTriangle",
    "Interval",
    "Region",
    "Barcode",
    "KINDS",
    "kind_of",
    "shift_interval",
    "intersect",
    "same_type",
    "rect_type",
    "triangle_type",
    "significance_threshold",
    "is_significant",
    "triviality_infimum",
    "alpha_interval",
    "alpha_leq",
    "block_to_triangle",
    "contains_point",
]


@dataclass(frozen=True)
class Rectangle:
    min: DecoratedPoint
    max: DecoratedPoint

    def __post_init__(self):
        if not isinstance(self.min, DecoratedPoint):
            object.__setattr__(self, "min", DecoratedPoint(tuple(self.min)))
        if not isinstance(self.max, DecoratedPoint):
            object.__setattr__(self, "max", DecoratedPoint(tuple(self.max)))
        if self.min.dim != self.max.dim:
            raise ValueError("min and max corners have different dimensions")
        for i, (lo, hi) in enumerate(zip(self.min, self.max)):
            if not lo < hi:
                raise ValueError(f"empty rectangle: coordinate {i} has {lo} >= {hi}")

    @property
    def dim(self) -> int:
        return self.min.dim

    @classmethod
    def from_bounds(cls, bounds: Sequence[Tuple], closed: Sequence[Tuple[bool, bool]] = None) -> Rectangle:
        """Build from ``[(lo, hi), ...]``; open on both sides unless ``closed`` says otherwise.

        Infinite ends are always open.
        """
        if closed is None:
            closed = [(False, False)] * len(bounds)
        lo_pt, hi_pt = [], []
        for (lo, hi), (clo, chi) in zip(bounds, closed):
            lo, hi = to_ext(lo), to_ext(hi)
            lo_pt.append(DecoratedValue(lo, MINUS if (clo and is_finite(lo)) else PLUS))
            hi_pt.append(DecoratedValue(hi, PLUS if (chi and is_finite(hi)) else MINUS))
        return cls(DecoratedPoint(tuple(lo_pt)), DecoratedPoint(tuple(hi_pt)))

    @classmethod
    def parse(cls, text: str) -> Rectangle:
        """Parse interval notation such as ``"(-3,1)x(-1,3)"`` or ``"[0,inf)x(0,1]"``."""
        factors = re.split(r"\s*[x×]\s*(?=[\[(])", text.strip())
        bounds, closed = [], []
        for fac in factors:
            m = re.fullmatch(r"\s*([\[(])\s*([^,]+?)\s*,\s*([^\])]+?)\s*([\])])\s*", fac)
            if m is None:
                raise ValueError(f"cannot parse rectangle factor {fac!r}")
            bounds.append((m.group(2), m.group(3)))
            closed.append((m.group(1) == "[", m.group(4) == "]"))
        return cls.from_bounds(bounds, closed)

    def coordinate(self, i: int) -> Tuple[DecoratedValue, DecoratedValue]:
        return self.min[i], self.max[i]

    def __str__(self):
        parts = []
        for lo, hi in zip(self.min, self.max):
            left = "[" if (lo.finite and lo.decoration is MINUS) else "("
            right = "]" if (hi.finite and hi.decoration is PLUS) else ")"
            parts.append(f"{left}{lo.value},{hi.value}{right}")
        return "x".join(parts)


@dataclass(frozen=True)
class FreeInterval:
    """The upset generated by an undecorated point; closed at ``min``."""

    min: Tuple[Fraction, ...]

    def __post_init__(self):
        pt = tuple(to_ext(c) for c in self.min)
        if not pt:
            raise ValueError("free interval needs at least one coordinate")
        if not all(is_finite(c) for c in pt):
            raise ValueError("free interval minima must be finite")
        object.__setattr__(self, "min", pt)

    @property
    def dim(self) -> int:
        return len(self.min)

    def as_rectangle(self) -> Rectangle:
        return Rectangle(
            DecoratedPoint(tuple(DecoratedValue(c, MINUS) for c in self.min)),
            DecoratedPoint(tuple(DecoratedValue(INF, MINUS) for _ in self.min)),
        )

    def __str__(self):
        return "<(" + ",".join(str(c) for c in self.min) + ")>"


@dataclass(frozen=True)
class GeneralizedTriangle:
    """``{(x, y) : x < a, y < b, x + y >= c}`` with ``a + b > c``."""

    a: Ext
    b: Ext
    c: Fraction

    def __post_init__(self):
        a, b, c = to_ext(self.a), to_ext(self.b), to_ext(self.c)
        if a == NEG_INF or b == NEG_INF or not is_finite(c):
            raise ValueError("generalized triangle needs a, b in Q or +inf and finite c")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        if not a + b > c:
            raise ValueError(f"empty generalized triangle: a + b = {a + b} <= {c}")

    @property
    def dim(self) -> int:
        return 2

    def __str__(self):
        return f"T(a={self.a}, b={self.b}, c={self.c})"


@dataclass(frozen=True)
class Triangle:
    """``{x < a, y < b} minus {x + y < 0}``; ``max = (a, b)`` with ``a + b > 0``."""

    a: Ext
    b: Ext

    def __post_init__(self):
        a, b = to_ext(self.a), to_ext(self.b)
        if a == NEG_INF or b == NEG_INF:
            raise ValueError("triangle corner coordinates must be rational or +inf")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if not a + b > 0:
            raise ValueError(f"empty triangle: a + b = {a + b} <= 0")

    @property
    def max(self) -> Tuple[Ext, Ext]:
        return (self.a, self.b)

    @property
    def dim(self) -> int:
        return 2

    def generalized(self) -> GeneralizedTriangle:
        return GeneralizedTriangle(self.a, self.b, Fraction(0))

    def __str__(self):
        return f"Tri({self.a},{self.b})"


Interval = Union[Rectangle, FreeInterval, Triangle]
Region = Union[Rectangle, FreeInterval, Triangle, GeneralizedTriangle]

KINDS = ("rectangle", "free", "triangle")


def kind_of(x: Region) -> str:
    if isinstance(x, Rectangle):
        return "rectangle"
    if isinstance(x, FreeInterval):
        return "free"
    if isinstance(x, (Triangle, GeneralizedTriangle)):
        return "triangle"
    raise TypeError(f"not an interval: {x!r}")


def _check_same(x: Region, y: Region):
    kx, ky = kind_of(x), kind_of(y)
    if kx != ky:
        raise TypeError(f"kind mismatch: {kx} vs {ky}")
    if x.dim != y.dim:
        raise ValueError(f"dimension mismatch: {x.dim} vs {y.dim}")


def _as_gen(x) -> GeneralizedTriangle:
    return x.generalized() if isinstance(x, Triangle) else x


# -- shifts and intersections -------------------------------------------------


def shift_interval(I: Region, eps) -> Region:
    """Return ``I(eps)``, the region whose interval module is ``I`` shifted by ``eps``.

    Points move by ``-eps``.  A shifted triangle is a :class:`GeneralizedTriangle`.
    """
    eps = Fraction(eps)
    if eps < 0:
        raise ValueError(f"shift must be nonnegative, got {eps}")
    if eps == 0:
        return I
    if isinstance(I, Rectangle):
        return Rectangle(I.min.shifted(-eps), I.max.shifted(-eps))
    if isinstance(I, FreeInterval):
        return FreeInterval(tuple(c - eps for c in I.min))
    g = _as_gen(I)
    if isinstance(g, GeneralizedTriangle):
        return GeneralizedTriangle(g.a - eps, g.b - eps, g.c - 2 * eps)
    raise TypeError(f"not an interval: {I!r}")


def intersect(*regions: Region) -> Optional[Region]:
    """Intersection of same-kind regions, or ``None`` when empty."""
    if not regions:
        raise ValueError("nothing to intersect")
    first = regions[0]
    for r in regions[1:]:
        _check_same(first, r)
    if isinstance(first, Rectangle):
        lo = [max(r.min[i] for r in regions) for i in range(first.dim)]
        hi = [min(r.max[i] for r in regions) for i in range(first.dim)]
        if any(not a < b for a, b in zip(lo, hi)):
            return None
        return Rectangle(DecoratedPoint(tuple(lo)), DecoratedPoint(tuple(hi)))
    if isinstance(first, FreeInterval):
        return FreeInterval(tuple(max(r.min[i] for r in regions) for i in range(first.dim)))
    gens = [_as_gen(r) for r in regions]
    a = min(g.a for g in gens)
    b = min(g.b for g in gens)
    c = max(g.c for g in gens)
    if not a + b > c:
        return None
    return GeneralizedTriangle(a, b, c)


def contains_point(I: Region, p: Sequence) -> bool:
    """Membership of an undecorated point, decorations respected exactly."""
    p = [to_ext(x) for x in p]
    if len(p) != I.dim:
        raise ValueError("point has the wrong dimension")
    if isinstance(I, Rectangle):
        return all(
            lo < DecoratedValue(x, PLUS) and DecoratedValue(x, MINUS) < hi
            for x, lo, hi in zip(p, I.min, I.max)
        )
    if isinstance(I, FreeInterval):
        return all(x >= m for x, m in zip(p, I.min))
    g = _as_gen(I)
    x, y = p
    return x < g.a and y < g.b and x + y >= g.c


# -- types ---------------------------------------------------------------------


def _coord_type(lo: DecoratedValue, hi: DecoratedValue) -> str:
    return {
        (True, True): "finite",
        (True, False): "upray",
        (False, True): "downray",
        (False, False): "line",
    }[(lo.finite, hi.finite)]


def rect_type(R: Rectangle) -> Tuple[str, ...]:
    return tuple(_coord_type(lo, hi) for lo, hi in zip(R.min, R.max))


def triangle_type(T: Union[Triangle, GeneralizedTriangle]) -> Tuple[bool, bool]:
    return (is_finite(T.a), is_finite(T.b))


def same_type(R: Region, S: Region) -> bool:
    """True when ``R \\ S`` and ``S \\ R`` are bounded."""
    _check_same(R, S)
    if isinstance(R, FreeInterval):
        return True
    if isinstance(R, Rectangle):
        return rect_type(R) == rect_type(S)
    return triangle_type(R) == triangle_type(S)


# -- significance ----------------------------------------------------------------


def significance_threshold(I: Region) -> DecoratedValue:
    """Decorated threshold ``t`` with: I is eps-significant iff ``(eps, +) <= t``.

    A ``-`` decoration means strict (``eps < t``), ``+`` means ``eps <= t``.
    """
    if isinstance(I, Rectangle):
        best = None
        for lo, hi in zip(I.min, I.max):
            length = hi.value - lo.value
            both_closed = lo.decoration is MINUS and hi.decoration is PLUS
            t = DecoratedValue(length, PLUS if both_closed and is_finite(length) else MINUS)
            best = t if best is None or t < best else best
        return best
    if isinstance(I, FreeInterval):
        return DecoratedValue(INF, MINUS)
    g = _as_gen(I)
    return DecoratedValue((g.a + g.b - g.c) / 2, MINUS)


def is_significant(I: Region, eps) -> bool:
    eps = Fraction(eps)
    if eps < 0:
        raise ValueError(f"eps must be nonnegative, got {eps}")
    return DecoratedValue(eps, PLUS) <= significance_threshold(I)


def triviality_infimum(I: Region) -> Ext:
    """``inf {eps : I is 2*eps-trivial}``; always attained when finite."""
    return significance_threshold(I).value / 2


# -- alpha preorder --------------------------------------------------------------


def alpha_interval(I: Region) -> Tuple[Fraction, int]:
    if isinstance(I, Rectangle):
        a1, p1 = alpha_stats(I.min)
        a2, p2 = alpha_stats(I.max)
        return a1 + a2, p1 + p2
    if isinstance(I, FreeInterval):
        return sum(I.min, Fraction(0)), 0
    return (
        u(DecoratedValue(I.a, MINUS)) + u(DecoratedValue(I.b, MINUS)),
        0,
    )


def alpha_leq(I: Region, J: Region) -> bool:
    _check_same(I, J)
    ai, pi = alpha_interval(I)
    aj, pj = alpha_interval(J)
    return ai < aj or (ai == aj and pi <= pj)


# -- blocks ---------------------------------------------------------------------


def block_to_triangle(a, b) -> Triangle:
    """Triangle for the block ``{a < x, y < b}`` under ``(x, y) -> (-x, y)``."""
    a, b = to_ext(a), to_ext(b)
    if a == INF or b == NEG_INF:
        raise ValueError("block endpoints must satisfy a in Q or -inf, b in Q or +inf")
    if not a < b:
        raise ValueError(f"block needs a < b, got {a} >= {b}")
    return Triangle(-a, b)


# -- barcodes ---------------------------------------------------------------------


class Barcode:
    """A finite multiset of same-kind intervals, each carrying a unique id.

    Iteration yields ``(id, interval)`` in insertion order.
    """

    def __init__(self, kind: str, dim: int, intervals: Iterable[Tuple[str, Interval]] = ()):
        if kind not in KINDS:
            raise ValueError(f"unknown kind {kind!r}")
        if kind == "triangle" and dim != 2:
            raise ValueError("triangles live in dimension 2")
        self.kind = kind
        self.dim = int(dim)
        self._items: Dict[str, Interval] = {}
        for ident, I in intervals:
            self._add(ident, I)

    def _add(self, ident, I):
        ident = str(ident)
        if ident in self._items:
            raise ValueError(f"duplicate interval id {ident!r}")
        if isinstance(I, GeneralizedTriangle) or kind_of(I) != self.kind:
            raise TypeError(f"interval {ident!r} is not a {self.kind}")
        if I.dim != self.dim:
            raise ValueError(f"interval {ident!r} has dimension {I.dim}, expected {self.dim}")
        self._items[ident] = I

    @classmethod
    def of(cls, intervals: Sequence[Interval], prefix: str = "I", kind: str = None, dim: int = None) -> Barcode:
        """Barcode with ids ``prefix1, prefix2, ...``."""
        intervals = list(intervals)
        if kind is None or dim is None:
            if not intervals:
                raise ValueError("kind and dim are required for an empty barcode")
            kind = kind or kind_of(intervals[0])
            dim = dim or intervals[0].dim
        return cls(kind, dim, [(f"{prefix}{i + 1}", I) for i, I in enumerate(intervals)])

    def __iter__(self) -> Iterator[Tuple[str, Interval]]:
        return iter(self._items.items())

    def __len__(self):
        return len(self._items)

    def __getitem__(self, ident: str) -> Interval:
        return self._items[ident]

    def __contains__(self, ident):
        return ident in self._items

    def ids(self) -> List[str]:
        return list(self._items)

    def intervals(self) -> List[Interval]:
        return list(self._items.values())

    def __eq__(self, other):
        return (
            isinstance(other, Barcode)
            and (self.kind, self.dim) == (other.kind, other.dim)
            and list(self) == list(other)
        )

    def __repr__(self):
        body = ", ".join(f"{k}={v}" for k, v in self)
        return f"Barcode({self.kind}, dim={self.dim}: {body})"
