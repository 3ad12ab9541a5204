from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from multistab.decorated import INF, MINUS, NEG_INF, PLUS, DecoratedValue
from multistab.fuzz import random_interval, random_rectangle
from multistab.intervals import (
    Barcode,
    FreeInterval,
    GeneralizedTriangle,
    Rectangle,
    Triangle,
    alpha_interval,
    alpha_leq,
    block_to_triangle,
    contains_point,
    intersect,
    is_significant,
    same_type,
    shift_interval,
    significance_threshold,
)
from multistab.oracle import build_grid, membership

R = Rectangle.parse
seeds = st.integers(0, 10**6)


def test_shift_examples():
    assert shift_interval(R("(2,5)x(2,5)"), 1) == R("(1,4)x(1,4)")
    assert shift_interval(R("(2,5)x(2,5)"), 2) == R("(0,3)x(0,3)")
    I = R("[0,1]x(2,inf)")
    assert shift_interval(I, 0) == I
    assert shift_interval(FreeInterval((1, 2)), Fraction(1, 2)) == FreeInterval((Fraction(1, 2), Fraction(3, 2)))
    assert shift_interval(Triangle(3, 5), 1) == GeneralizedTriangle(2, 4, -2)
    with pytest.raises(ValueError):
        shift_interval(I, -1)


def test_intersect_examples():
    assert intersect(R("(0,4)x(0,4)"), R("(0,3)x(0,3)")) == R("(0,3)x(0,3)")
    assert intersect(R("(-1,3)x(0,1)"), R("(-3,-1)x(0,1)")) is None
    assert intersect(FreeInterval((0, 0)), FreeInterval((3, -1))) == FreeInterval((3, 0))
    assert intersect(Triangle(1, 1), GeneralizedTriangle(3, 3, 2)) is None
    with pytest.raises(TypeError):
        intersect(R("(0,1)x(0,1)"), FreeInterval((0, 0)))


def test_same_type_examples():
    assert same_type(R("[0,inf)x(0,1]"), R("[5,inf)x(-3,-2]"))
    assert not same_type(R("(-inf,0]x(-inf,inf)"), R("[0,inf)x(-inf,inf)"))
    I = R("(0,1)x(0,inf)")
    assert same_type(I, I)
    with pytest.raises(ValueError):
        same_type(R("(0,1)"), I)


def test_significance_examples():
    assert significance_threshold(R("(-3,1)x(-1,3)")) == DecoratedValue(4, MINUS)
    assert significance_threshold(R("[0,2]x[0,6]")) == DecoratedValue(2, PLUS)
    assert significance_threshold(Triangle(3, 5)) == DecoratedValue(4, MINUS)
    assert significance_threshold(FreeInterval((5, 5))) == DecoratedValue(INF, MINUS)
    assert not is_significant(R("(-1,1)x(-1,1)"), 2)
    assert is_significant(FreeInterval((5, 5)), 10**6)
    assert is_significant(R("(-3,1)x(-1,3)"), Fraction(7, 2))
    assert is_significant(R("[0,2]x[0,6]"), 2) and not is_significant(R("[0,2]x[0,6]"), Fraction(201, 100))


def test_alpha_examples():
    assert alpha_interval(R("(0,4)x(0,4)")) == (8, 2)
    assert alpha_interval(R("(2,5)x(2,5)")) == (14, 2)
    assert alpha_interval(Triangle(INF, 3)) == (3, 0)
    assert alpha_leq(R("(0,4)x(0,4)"), R("(2,5)x(2,5)"))
    assert alpha_leq(R("(0,4)x(0,4)"), R("(0,4)x(0,4)"))
    half_open, open_ = R("[0,1]x(0,1]"), R("(0,1)x(0,1)")
    assert alpha_leq(open_, half_open) and not alpha_leq(half_open, open_)


def test_block_to_triangle():
    assert block_to_triangle(0, 5) == Triangle(0, 5)
    assert block_to_triangle(NEG_INF, 3) == Triangle(INF, 3)
    assert block_to_triangle(2, 3) == Triangle(-2, 3)
    with pytest.raises(ValueError):
        block_to_triangle(3, 3)


def test_invariants_rejected():
    with pytest.raises(ValueError):
        R("(1,1)")
    assert R("[1,1]").dim == 1
    with pytest.raises(ValueError):
        Triangle(-1, 1)
    with pytest.raises(ValueError):
        FreeInterval((0, INF))


def test_barcode_validation():
    with pytest.raises(ValueError):
        Barcode("rectangle", 1, [("a", R("(0,1)")), ("a", R("(0,2)"))])
    with pytest.raises(TypeError):
        Barcode("rectangle", 2, [("a", FreeInterval((0, 0)))])
    with pytest.raises(ValueError):
        Barcode("rectangle", 2, [("a", R("(0,1)"))])
    with pytest.raises(TypeError):
        Barcode("triangle", 2, [("a", GeneralizedTriangle(1, 1, -1))])
    B = Barcode.of([R("(0,1)"), R("(0,2)")], prefix="J")
    assert B.ids() == ["J1", "J2"] and "J2" in B and len(B) == 2


@given(seeds, st.sampled_from(["rectangle", "free", "triangle"]))
def test_shift_composes(seed, kind):
    import random

    rng = random.Random(seed)
    I = random_interval(rng, kind, 2)
    s, t = Fraction(rng.randint(0, 6), 2), Fraction(rng.randint(0, 6), 3)
    assert shift_interval(shift_interval(I, s), t) == shift_interval(I, s + t)


@given(seeds)
def test_significance_antitone(seed):
    import random

    rng = random.Random(seed)
    I = random_interval(rng, rng.choice(["rectangle", "triangle"]), 2)
    e, e2 = sorted(Fraction(rng.randint(0, 20), 4) for _ in range(2))
    if is_significant(I, e2):
        assert is_significant(I, e)


@given(seeds)
def test_alpha_leq_preorder(seed):
    import random

    rng = random.Random(seed)
    a, b, c = (random_rectangle(rng, 2) for _ in range(3))
    assert alpha_leq(a, a)
    if alpha_leq(a, b) and alpha_leq(b, c):
        assert alpha_leq(a, c)


@settings(max_examples=60)
@given(seeds)
def test_rectangle_intersection_matches_grid(seed):
    import random

    rng = random.Random(seed)
    dim = rng.randint(1, 3)
    A, B = random_rectangle(rng, dim), random_rectangle(rng, dim)
    expected = all(A.min[i] < B.max[i] and B.min[i] < A.max[i] for i in range(dim))
    grid = build_grid([A, B])
    on_grid = bool((membership(A, grid) & membership(B, grid)).any())
    assert (intersect(A, B) is not None) == expected == on_grid


def test_contains_point_uses_decorations():
    I = R("[0,1)x(0,1]")
    assert contains_point(I, (0, 1)) and not contains_point(I, (1, 1)) and not contains_point(I, (0, 0))
    assert contains_point(FreeInterval((0, 0)), (0, 5))
    assert contains_point(Triangle(1, 1), (0, 0)) and not contains_point(Triangle(1, 1), (-1, 0))
