"""Morphisms between interval modules of the supported classes.

For rectangles, free intervals and (generalized) triangles the space
``Hom(I^I, I^J)`` is at most one-dimensional: a nonzero morphism is a
single scalar on ``I & J``.  It exists exactly when ``I & J`` is nonempty,
upward closed in ``I`` and downward closed in ``J``.
"""

from __future__ import annotations

from fractions import Fraction

from .intervals import (
    FreeInterval,
    GeneralizedTriangle,
    Rectangle,
    Region,
    Triangle,
    _check_same,
    intersect,
)

__all__ = ["hom_nonzero", "composite_nonzero", "path_scalar", "InvalidWitness"]


class InvalidWitness(ValueError):
    """A nonzero weight was attached to a pair with no nonzero morphism."""


def hom_nonzero(I: Region, J: Region) -> bool:
    """Is there a nonzero morphism ``I^I -> I^J``?"""
    _check_same(I, J)
    if isinstance(I, FreeInterval):
        return all(mj <= mi for mi, mj in zip(I.min, J.min))
    if isinstance(I, Rectangle):
        return J.min <= I.min and J.max <= I.max and intersect(I, J) is not None
    gi = I.generalized() if isinstance(I, Triangle) else I
    gj = J.generalized() if isinstance(J, Triangle) else J
    assert isinstance(gi, GeneralizedTriangle) and isinstance(gj, GeneralizedTriangle)
    return gj.c <= gi.c and gj.a <= gi.a and gj.b <= gi.b and intersect(gi, gj) is not None


def composite_nonzero(I: Region, J: Region, K: Region) -> bool:
    """Is the composite ``I^I -> I^J -> I^K`` of two nonzero morphisms nonzero?

    ``J`` and ``K`` are passed already shifted.  The composite is the product
    of scalars on ``I & J & K`` and vanishes exactly when that set is empty.
    """
    if not (hom_nonzero(I, J) and hom_nonzero(J, K)):
        raise ValueError("composite_nonzero needs nonzero morphisms I -> J and J -> K")
    return intersect(I, J, K) is not None


def path_scalar(wf, wg, I: Region, J: Region, K: Region) -> Fraction:
    """Scalar of the composite of multiplication by ``wf`` then ``wg``.

    Raises :class:`InvalidWitness` when a nonzero weight sits on a zero Hom space.
    """
    wf, wg = Fraction(wf), Fraction(wg)
    if wf != 0 and not hom_nonzero(I, J):
        raise InvalidWitness(f"weight {wf} on a zero Hom space {I} -> {J}")
    if wg != 0 and not hom_nonzero(J, K):
        raise InvalidWitness(f"weight {wg} on a zero Hom space {J} -> {K}")
    if wf == 0 or wg == 0:
        return Fraction(0)
    return wf * wg if composite_nonzero(I, J, K) else Fraction(0)
