from fractions import Fraction

import pytest

from multistab.decorated import INF
from multistab.instances import square
from multistab.intervals import Barcode, FreeInterval, Rectangle, Triangle
from multistab.oracle import (
    InadequateGrid,
    InstanceTooLarge,
    MAX_BOTTLENECK_SIZE,
    build_grid,
    membership,
    oracle_bottleneck,
    oracle_hom_nonzero,
    oracle_pair_interleaved,
    oracle_verify_witness,
)

R = Rectangle.parse
F = Fraction


def test_grid_contains_criticals_midpoints_and_beyond():
    g = build_grid([R("(0,2)")], [1])
    axis = g.axes[0]
    for v in (-1, 0, 1, 2):
        assert v in axis
    assert F(1, 2) in axis and min(axis) < -1 and max(axis) > 2


def test_membership_respects_decorations():
    g = build_grid([R("[0,1)")])
    pts = [p[0] for p in g.points()]
    mask = membership(R("[0,1)"), g)
    assert [x for x, m in zip(pts, mask) if m] == [x for x in pts if 0 <= x < 1]
    free = membership(FreeInterval((1,)), build_grid([FreeInterval((1,))]))
    assert free.any() and not free.all()


def test_triangle_membership():
    T = Triangle(2, 3)
    g = build_grid([T])
    mask = membership(T, g)
    for (i, x), (j, y) in ((a, b) for a in enumerate(g.axes[0]) for b in enumerate(g.axes[1])):
        assert mask[i, j] == (x < 2 and y < 3 and x + y >= 0)


def test_hom_refinement_invariance():
    I, J = R("(0,3)x[1,4]"), R("[-1,2)x(0,3]")
    g = build_grid([I, J], [1])
    assert oracle_hom_nonzero(I, J, g, 0, 1) == oracle_hom_nonzero(I, J, g.refine(), 0, 1)


def test_inadequate_grid_is_rejected():
    I = R("(0,3)")
    g = build_grid([I])
    with pytest.raises(InadequateGrid):
        oracle_hom_nonzero(I, R("(7,9)"), g)
    with pytest.raises(InadequateGrid):
        oracle_pair_interleaved(I, I, 1, g)


def test_pair_oracle_examples():
    I, J = R("(0,12)x(-1,11)"), R("(1,9)x(0,12)")
    for eps, expected in ((2, False), (3, True)):
        assert oracle_pair_interleaved(I, J, eps, build_grid([I, J], [eps, 2 * eps])) is expected


def test_witness_oracle_on_square():
    ins = square()
    W = ins.witness
    grid = build_grid(ins.M.intervals() + ins.N.intervals(), [W.delta, 2 * W.delta])
    assert oracle_verify_witness(ins.M, ins.N, W, grid).valid


def test_bottleneck_oracle():
    assert oracle_bottleneck(Barcode.of([R("[0,2]")]), Barcode("rectangle", 1)) == 1
    assert oracle_bottleneck(square().M, square().N) == 2
    assert oracle_bottleneck(Barcode.of([FreeInterval((0,))]), Barcode("free", 1)) == INF
    big = Barcode.of([R("(0,1)")] * (MAX_BOTTLENECK_SIZE + 1))
    with pytest.raises(InstanceTooLarge):
        oracle_bottleneck(big, big)
