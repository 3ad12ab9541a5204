import pytest

from multistab.homs import InvalidWitness, composite_nonzero, hom_nonzero, path_scalar
from multistab.intervals import FreeInterval, Rectangle, Triangle, shift_interval

R = Rectangle.parse
I1, I2, I3 = R("(-3,1)x(-1,3)"), R("(-1,3)x(-3,1)"), R("(-1,1)x(-1,1)")
J = R("(-2,2)x(-2,2)")


def test_hom_examples():
    S = R("(2,5)x(2,5)")
    assert not hom_nonzero(R("(0,4)x(0,4)"), shift_interval(S, 1))
    assert hom_nonzero(R("(0,4)x(0,4)"), shift_interval(S, 2))
    for I in (I1, FreeInterval((1, 2)), Triangle(2, 3)):
        assert hom_nonzero(I, I)


def test_hom_needs_overlap_and_order():
    assert not hom_nonzero(R("(0,1)"), R("(-5,0)"))
    assert hom_nonzero(FreeInterval((3, 3)), FreeInterval((0, 1)))
    assert not hom_nonzero(FreeInterval((0, 1)), FreeInterval((3, 3)))
    assert hom_nonzero(Triangle(3, 3), shift_interval(Triangle(3, 3), 1))
    with pytest.raises(TypeError):
        hom_nonzero(I1, FreeInterval((0, 0)))


def test_composite_examples():
    J1 = shift_interval(J, 1)
    assert J1 == R("(-3,1)x(-3,1)")
    assert shift_interval(I2, 2) == R("(-3,1)x(-5,-1)")
    assert not composite_nonzero(I1, J1, shift_interval(I2, 2))
    assert composite_nonzero(I1, J1, shift_interval(I1, 2))
    assert composite_nonzero(I3, I3, I3)
    with pytest.raises(ValueError):
        composite_nonzero(I1, shift_interval(J, 5), I1)


def test_path_scalar_examples():
    J1 = shift_interval(J, 1)
    assert path_scalar(1, 1, I1, J1, shift_interval(I2, 2)) == 0
    # (-1,1)^2 and (-3,-1)^2 share only a boundary point, so the composite vanishes
    assert path_scalar(1, -1, I3, J1, shift_interval(I3, 2)) == 0
    assert path_scalar(1, -1, I1, J1, shift_interval(I1, 2)) == -1
    assert path_scalar(0, 5, I1, J1, shift_interval(I1, 2)) == 0
    with pytest.raises(InvalidWitness):
        path_scalar(1, 1, R("(0,1)x(0,1)"), R("(5,6)x(5,6)"), R("(5,6)x(5,6)"))
