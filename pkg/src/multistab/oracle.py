"""Brute-force ground truth on finite grids.

Everything here works from raw membership tests on grid points and
explicit pointwise linear algebra; none of it calls the closed-form
criteria in :mod:`multistab.homs` or :mod:`multistab.interleave` (the
exhaustive bottleneck only reuses the pairwise distance).

Grid adequacy: modules of these classes are constant on the cells cut out
by the lines ``x_i = endpoint - shift`` (and, for triangles, the diagonals
``x + y = c - 2 shift``).  The grid samples every such value, a midpoint of
every gap and one point beyond each end, so each cell contributes a point.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .decorated import INF, MINUS, PLUS, Ext, is_finite
from .homs import InvalidWitness
from .interleave import Verdict, Violation, WeightMatrix, pair_distance
from .intervals import (
    Barcode,
    FreeInterval,
    GeneralizedTriangle,
    Rectangle,
    Region,
    Triangle,
    triviality_infimum,
)

__all__ = [
    "Grid",
    "InadequateGrid",
    "InstanceTooLarge",
    "build_grid",
    "membership",
    "oracle_hom_nonzero",
    "oracle_pair_interleaved",
    "oracle_verify_witness",
    "oracle_bottleneck",
]

MAX_BOTTLENECK_SIZE = 6


class InadequateGrid(ValueError):
    pass


class InstanceTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class Grid:
    axes: Tuple[Tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.axes)

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(len(a) for a in self.axes)

    def refine(self) -> Grid:
        """Insert a midpoint into every gap."""
        return Grid(tuple(_with_midpoints(a, beyond=False) for a in self.axes))

    def points(self):
        return itertools.product(*self.axes)

    @functools.cached_property
    def _integer_axes(self) -> Tuple[int, List[np.ndarray]]:
        L = lcm(*(v.denominator for a in self.axes for v in a))
        big = any(abs(v) * L >= 2**60 for a in self.axes for v in a)
        dtype = object if big else np.int64
        return L, [np.array([int(v * L) for v in a], dtype=dtype) for a in self.axes]

    def scaled(self, *extra: Ext) -> Tuple[List[np.ndarray], List[Optional[int]]]:
        """Axes and finite ``extra`` numbers multiplied by one common denominator.

        Integer comparisons on the results are exact; infinite extras map to ``None``.
        """
        base, arrays = self._integer_axes
        L = lcm(base, *(Fraction(x).denominator for x in extra if is_finite(x)))
        if L != base:
            arrays = [a * (L // base) for a in arrays]
        return arrays, [int(x * L) if is_finite(x) else None for x in extra]


def _with_midpoints(values: Iterable[Fraction], beyond: bool = True) -> Tuple[Fraction, ...]:
    vals = sorted(set(values))
    if not vals:
        vals = [Fraction(0)]
    out = set(vals)
    out.update((a + b) / 2 for a, b in zip(vals, vals[1:]))
    if beyond:
        out.add(vals[0] - 1)
        out.add(vals[-1] + 1)
    return tuple(sorted(out))


def _triangle_params(T) -> Tuple[Ext, Ext, Fraction]:
    if isinstance(T, Triangle):
        return T.a, T.b, Fraction(0)
    return T.a, T.b, T.c


def _axis_criticals(regions: Sequence[Region], shifts: Sequence[Fraction], dim: int) -> List[set]:
    crit = [set() for _ in range(dim)]
    for R in regions:
        for s in shifts:
            if isinstance(R, Rectangle):
                for i in range(dim):
                    for c in (R.min[i], R.max[i]):
                        if c.finite:
                            crit[i].add(c.value - s)
            elif isinstance(R, FreeInterval):
                for i in range(dim):
                    crit[i].add(R.min[i] - s)
    return crit


def build_grid(intervals: Sequence[Region], shifts: Sequence = ()) -> Grid:
    """Grid adequate for ``intervals`` evaluated at every shift in ``{0} | shifts``."""
    intervals = list(intervals)
    shifts = sorted({Fraction(0)} | {Fraction(s) for s in shifts})
    if not intervals:
        return Grid((_with_midpoints([]),))
    dim = intervals[0].dim
    if any(isinstance(R, (Triangle, GeneralizedTriangle)) for R in intervals):
        xs, ys, diags = set(), set(), set()
        for R in intervals:
            a, b, c = _triangle_params(R)
            for s in shifts:
                if is_finite(a):
                    xs.add(a - s)
                if is_finite(b):
                    ys.add(b - s)
                diags.add(c - 2 * s)
        xs |= {c - y for c in diags for y in ys}
        x_axis = _with_midpoints(xs)
        y_axis = _with_midpoints(ys | {c - x for c in diags for x in x_axis})
        return Grid((x_axis, y_axis))
    crit = _axis_criticals(intervals, shifts, dim)
    return Grid(tuple(_with_midpoints(c) for c in crit))


def _require_adequate(grid: Grid, regions: Sequence[Region], shifts: Sequence[Fraction]):
    if not regions:
        return
    if grid.dim != regions[0].dim:
        raise InadequateGrid("grid dimension does not match the intervals")
    shifts = {Fraction(0)} | {Fraction(s) for s in shifts}
    if any(isinstance(R, (Triangle, GeneralizedTriangle)) for R in regions):
        xs, ys = set(grid.axes[0]), set(grid.axes[1])
        for R in regions:
            a, b, c = _triangle_params(R)
            for s in shifts:
                if (is_finite(a) and a - s not in xs) or (is_finite(b) and b - s not in ys):
                    raise InadequateGrid(f"grid misses a corner of {R} shifted by {s}")
        return
    crit = _axis_criticals(regions, sorted(shifts), grid.dim)
    for i, needed in enumerate(crit):
        missing = needed - set(grid.axes[i])
        if missing:
            raise InadequateGrid(f"axis {i} misses critical values {sorted(missing)[:3]}")


# -- pointwise membership ----------------------------------------------------------


def _axis_mask(xs: np.ndarray, lo: Optional[int], lo_closed: bool, hi: Optional[int], hi_closed: bool):
    """Membership of the scaled, already shifted axis values in one factor."""
    out = np.ones(len(xs), dtype=bool)
    if lo is not None:
        out &= (xs >= lo) if lo_closed else (xs > lo)
    if hi is not None:
        out &= (xs <= hi) if hi_closed else (xs < hi)
    return out


def _outer_and(masks: Sequence[np.ndarray]) -> np.ndarray:
    n = len(masks)
    out = np.ones(tuple(len(m) for m in masks), dtype=bool)
    for i, m in enumerate(masks):
        shape = [1] * n
        shape[i] = len(m)
        out &= m.reshape(shape)
    return out


def membership(R: Region, grid: Grid, s=0) -> np.ndarray:
    """Boolean array: is ``p + s`` in ``R`` for each grid point ``p``."""
    s = Fraction(s)
    if isinstance(R, Rectangle):
        ends = [c.value for c in R.min] + [c.value for c in R.max]
        axes, scaled = grid.scaled(s, *ends)
        s_i, lo, hi = scaled[0], scaled[1 : 1 + R.dim], scaled[1 + R.dim :]
        return _outer_and([
            _axis_mask(axes[i] + s_i, lo[i], R.min[i].decoration is MINUS, hi[i], R.max[i].decoration is PLUS)
            for i in range(R.dim)
        ])
    if isinstance(R, FreeInterval):
        axes, (s_i, *lo) = grid.scaled(s, *R.min)
        return _outer_and([_axis_mask(axes[i] + s_i, lo[i], True, None, False) for i in range(R.dim)])
    a, b, c = _triangle_params(R)
    (xs, ys), (a_i, b_i, c_i, s_i) = grid.scaled(a, b, c, s)
    X, Y = xs + s_i, ys + s_i
    out = X[:, None] + Y[None, :] >= c_i
    if a_i is not None:
        out &= (X < a_i)[:, None]
    if b_i is not None:
        out &= (Y < b_i)[None, :]
    return out


def _down_closure(mask: np.ndarray) -> np.ndarray:
    """``out[q]`` iff some ``p <= q`` has ``mask[p]``."""
    out = mask.copy()
    for ax in range(mask.ndim):
        out = np.logical_or.accumulate(out, axis=ax)
    return out


def _up_closure(mask: np.ndarray) -> np.ndarray:
    flipped = mask[tuple(slice(None, None, -1) for _ in range(mask.ndim))]
    out = _down_closure(flipped)
    return out[tuple(slice(None, None, -1) for _ in range(mask.ndim))]


def _natural(src: np.ndarray, dst: np.ndarray) -> bool:
    """Does scalar 1 on ``src & dst`` (0 elsewhere) commute with all internal maps?

    Failures are ``p <= q`` with ``p`` in the overlap and ``q`` in ``dst - src``,
    or ``p`` in ``src - dst`` below an overlap point ``q``.
    """
    overlap = src & dst
    if not overlap.any():
        return True
    if (_down_closure(overlap) & dst & ~src).any():
        return False
    if (_up_closure(overlap) & src & ~dst).any():
        return False
    return True


# -- oracles ----------------------------------------------------------------------


def oracle_hom_nonzero(I: Region, J: Region, grid: Grid, shift_source=0, shift_target=0) -> bool:
    """Grid check that the scalar-1 candidate ``I(s) -> J(t)`` is a nonzero morphism."""
    _require_adequate(grid, [I, J], [shift_source, shift_target])
    src = membership(I, grid, shift_source)
    dst = membership(J, grid, shift_target)
    return bool((src & dst).any()) and _natural(src, dst)


def oracle_pair_interleaved(I: Region, J: Region, eps, grid: Grid) -> bool:
    """Try ``(f, g) = (0, 0)`` and ``(1, 1)`` against every grid equation.

    Hom spaces are at most one-dimensional and ``(f, g) -> (c f, g / c)``
    preserves the equations, so these two candidates are exhaustive.
    """
    eps = Fraction(eps)
    _require_adequate(grid, [I, J], [eps, 2 * eps])
    i0, i1, i2 = (membership(I, grid, k * eps) for k in range(3))
    j0, j1, j2 = (membership(J, grid, k * eps) for k in range(3))
    phi_i = i0 & i2
    phi_j = j0 & j2
    if not phi_i.any() and not phi_j.any():
        return True
    if not (_natural(i0, j1) and _natural(j0, i1)):
        return False
    return bool(np.array_equal(i0 & j1 & i2, phi_i) and np.array_equal(j0 & i1 & j2, phi_j))


def _scaled_weights(W: WeightMatrix) -> Tuple[int, Dict, Dict]:
    L = 1
    for w in itertools.chain(W.f.values(), W.g.values()):
        L = lcm(L, w.denominator)
    f = {k: int(w * L) for k, w in W.f.items()}
    g = {k: int(w * L) for k, w in W.g.items()}
    return L, f, g


def _oracle_side(side, A: Barcode, B: Barcode, there, back, L, masks_a, masks_b) -> List[Violation]:
    out = []
    scale = L * L
    for x, _ in A:
        for x2, _ in A:
            total = np.zeros(masks_a[x][0].shape, dtype=object)
            for y, _ in B:
                wf, wg = there.get((x, y), 0), back.get((y, x2), 0)
                if wf and wg:
                    total = total + (wf * wg) * (masks_a[x][0] & masks_b[y][1] & masks_a[x2][2]).astype(object)
            expected = np.zeros_like(total)
            if x == x2:
                expected = (masks_a[x][0] & masks_a[x][2]).astype(object) * scale
            diff = np.nonzero(total != expected)
            if len(diff[0]):
                at = tuple(d[0] for d in diff)
                out.append(Violation(side, x, x2, Fraction(total[at], scale), Fraction(expected[at], scale)))
    return out


def oracle_verify_witness(M: Barcode, N: Barcode, W: WeightMatrix, grid: Grid) -> Verdict:
    """Evaluate ``g_{p+d} f_p = phi_M(p, p+2d)`` and its mirror at every grid point."""
    d = W.delta
    _require_adequate(grid, M.intervals() + N.intervals(), [d, 2 * d])
    masks_m = {i: [membership(I, grid, k * d) for k in range(3)] for i, I in M}
    masks_n = {j: [membership(J, grid, k * d) for k in range(3)] for j, J in N}
    for (i, j), w in W.f.items():
        src, dst = masks_m[i][0], masks_n[j][1]
        if not ((src & dst).any() and _natural(src, dst)):
            raise InvalidWitness(f"f entry ({i}, {j}) = {w} is not a morphism on the grid")
    for (j, i), w in W.g.items():
        src, dst = masks_n[j][0], masks_m[i][1]
        if not ((src & dst).any() and _natural(src, dst)):
            raise InvalidWitness(f"g entry ({j}, {i}) = {w} is not a morphism on the grid")
    L, f, g = _scaled_weights(W)
    return Verdict(
        _oracle_side("M", M, N, f, g, L, masks_m, masks_n)
        + _oracle_side("N", N, M, g, f, L, masks_n, masks_m)
    )


def oracle_bottleneck(M: Barcode, N: Barcode) -> Ext:
    """Minimum over all partial bijections of the largest pairwise cost."""
    if len(M) > MAX_BOTTLENECK_SIZE or len(N) > MAX_BOTTLENECK_SIZE:
        raise InstanceTooLarge(f"at most {MAX_BOTTLENECK_SIZE} bars per side")
    left, right = M.intervals(), N.intervals()
    pair = [[pair_distance(I, J)[0] for J in right] for I in left]
    solo_l = [triviality_infimum(I) for I in left]
    solo_r = [triviality_infimum(J) for J in right]
    best: List[Ext] = [INF]

    def go(k: int, used: frozenset, worst):
        if worst >= best[0]:
            return
        if k == len(left):
            total = max([worst] + [solo_r[j] for j in range(len(right)) if j not in used])
            if total < best[0]:
                best[0] = total
            return
        go(k + 1, used, max(worst, solo_l[k]))
        for j in range(len(right)):
            if j not in used:
                go(k + 1, used | {j}, max(worst, pair[k][j]))

    go(0, frozenset(), Fraction(0))
    return best[0]
