"""Seeded random instances for property tests and the ``fuzz`` command.

All generators take a :class:`random.Random` and draw coordinates from a
small lattice ``k / denom`` so that coincidences (equal endpoints, exact
ties at critical values) happen often.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .decorated import INF, MINUS, NEG_INF, PLUS, DecoratedPoint, DecoratedValue
from .homs import hom_nonzero
from .interleave import WeightMatrix, witness_from_matching
from .intervals import Barcode, FreeInterval, Rectangle, Triangle, shift_interval
from .matching import matching_feasible

__all__ = [
    "FuzzParams",
    "random_value",
    "random_rectangle",
    "random_free",
    "random_triangle",
    "random_interval",
    "random_barcode",
    "perturb",
    "random_witness",
    "fuzz_generate",
]

RECT_TYPES = ("finite", "upray", "downray", "line")


@dataclass
class FuzzParams:
    kind: str = "rectangle"
    dim: int = 2
    max_size: int = 3
    span: int = 4
    denom: int = 2
    p_infinite: Fraction = Fraction(1, 6)
    mode: str = "pair"  # "pair", "matched" or "perturb"
    delta: Fraction = Fraction(1, 2)


def random_value(rng: random.Random, span: int = 4, denom: int = 2) -> Fraction:
    return Fraction(rng.randint(-span * denom, span * denom), denom)


def _dec(rng):
    return PLUS if rng.random() < 0.5 else MINUS


def _factor(rng, kind: str, span: int, denom: int) -> Tuple[DecoratedValue, DecoratedValue]:
    while True:
        lo = DecoratedValue(random_value(rng, span, denom), _dec(rng))
        hi = DecoratedValue(random_value(rng, span, denom), _dec(rng))
        if kind in ("downray", "line"):
            lo = DecoratedValue(NEG_INF, PLUS)
        if kind in ("upray", "line"):
            hi = DecoratedValue(INF, MINUS)
        if kind == "finite" and hi < lo:
            lo, hi = hi, lo
        if lo < hi:
            return lo, hi


def random_rectangle(
    rng: random.Random,
    dim: int,
    span: int = 4,
    denom: int = 2,
    p_infinite: float = 1 / 6,
    pattern: Optional[Sequence[str]] = None,
) -> Rectangle:
    """Random nonempty rectangle; ``pattern`` fixes the boundedness type per coordinate."""
    if pattern is None:
        pattern = []
        for _ in range(dim):
            if rng.random() < p_infinite:
                pattern.append(rng.choice(RECT_TYPES[1:]))
            else:
                pattern.append("finite")
    lo, hi = zip(*(_factor(rng, k, span, denom) for k in pattern))
    return Rectangle(DecoratedPoint(lo), DecoratedPoint(hi))


def random_free(rng: random.Random, dim: int, span: int = 4, denom: int = 2) -> FreeInterval:
    return FreeInterval(tuple(random_value(rng, span, denom) for _ in range(dim)))


def random_triangle(
    rng: random.Random,
    span: int = 4,
    denom: int = 2,
    p_infinite: float = 1 / 6,
    pattern: Optional[Tuple[bool, bool]] = None,
) -> Triangle:
    """Random triangle; ``pattern = (a finite, b finite)`` fixes its type."""
    if pattern is None:
        pattern = (rng.random() >= p_infinite, rng.random() >= p_infinite)
    while True:
        a = random_value(rng, span, denom) if pattern[0] else INF
        b = random_value(rng, span, denom) if pattern[1] else INF
        if a + b > 0:
            return Triangle(a, b)


def random_interval(rng, kind: str, dim: int, span: int = 4, denom: int = 2, p_infinite=1 / 6):
    if kind == "rectangle":
        return random_rectangle(rng, dim, span, denom, p_infinite)
    if kind == "free":
        return random_free(rng, dim, span, denom)
    if kind == "triangle":
        return random_triangle(rng, span, denom, p_infinite)
    raise ValueError(f"unknown kind {kind!r}")


def random_barcode(rng, kind: str, dim: int, size: int, prefix: str = "I", span: int = 4, denom: int = 2,
                   p_infinite=1 / 6) -> Barcode:
    return Barcode(
        kind,
        dim,
        [(f"{prefix}{k + 1}", random_interval(rng, kind, dim, span, denom, p_infinite)) for k in range(size)],
    )


def _nudge(rng, x, delta: Fraction, denom: int):
    if x in (INF, NEG_INF):
        return x
    steps = int(delta * denom)
    return x + Fraction(rng.randint(-steps, steps), denom)


def _perturb_one(rng, I, delta: Fraction, denom: int):
    for _ in range(100):
        try:
            if isinstance(I, Rectangle):
                lo = [DecoratedValue(_nudge(rng, c.value, delta, denom), c.decoration) for c in I.min]
                hi = [DecoratedValue(_nudge(rng, c.value, delta, denom), c.decoration) for c in I.max]
                return Rectangle(DecoratedPoint(tuple(lo)), DecoratedPoint(tuple(hi)))
            if isinstance(I, FreeInterval):
                return FreeInterval(tuple(_nudge(rng, c, delta, denom) for c in I.min))
            return Triangle(_nudge(rng, I.a, delta, denom), _nudge(rng, I.b, delta, denom))
        except ValueError:
            continue
    return I


def perturb(rng, B: Barcode, delta, prefix: str = "J", denom: int = 2) -> Barcode:
    """Copy of ``B`` with every finite endpoint moved by at most ``delta``.

    Decorations are kept; moves are multiples of ``1/denom``.
    """
    delta = Fraction(delta)
    return Barcode(
        B.kind, B.dim, [(f"{prefix}{k + 1}", _perturb_one(rng, I, delta, denom)) for k, (_, I) in enumerate(B)]
    )


WEIGHTS = (Fraction(1), Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 2))


def random_witness(rng, M: Barcode, N: Barcode, delta, density: float = 0.6) -> WeightMatrix:
    """Random weights on entries whose Hom space is nonzero; usually not a valid witness."""
    delta = Fraction(delta)
    f, g = {}, {}
    for i, I in M:
        for j, J in N:
            if hom_nonzero(I, shift_interval(J, delta)) and rng.random() < density:
                f[(i, j)] = rng.choice(WEIGHTS)
            if hom_nonzero(J, shift_interval(I, delta)) and rng.random() < density:
                g[(j, i)] = rng.choice(WEIGHTS)
    return WeightMatrix(delta, f, g)


def fuzz_generate(seed: int, params: FuzzParams = None):
    """Deterministic instance for ``seed``.

    ``pair``     two independent barcodes ``(M, N)``.
    ``perturb``  ``(M, N)`` with ``N`` a ``delta``-perturbation of ``M``.
    ``matched``  ``(M, N, W)``: ``W`` is built from an eps-matching at the
                 smallest lattice eps that admits one.
    """
    params = params or FuzzParams()
    rng = random.Random(seed)
    size_m = rng.randint(0 if params.mode == "pair" else 1, params.max_size)
    kw = dict(span=params.span, denom=params.denom, p_infinite=params.p_infinite)
    M = random_barcode(rng, params.kind, params.dim, size_m, "I", **kw)
    if params.mode == "perturb":
        return M, perturb(rng, M, params.delta, denom=params.denom)
    size_n = rng.randint(0, params.max_size)
    N = random_barcode(rng, params.kind, params.dim, size_n, "J", **kw)
    if params.mode == "pair":
        return M, N
    if params.mode == "matched":
        for k in range(0, 8 * params.span * params.denom + 1):
            eps = Fraction(k, params.denom)
            found = matching_feasible(M, N, eps)
            if found is not None:
                return M, N, witness_from_matching(M, N, found.pairs, eps)
        return M, N, None
    raise ValueError(f"unknown mode {params.mode!r}")
