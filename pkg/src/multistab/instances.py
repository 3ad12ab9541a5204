"""The worked counterexamples, ready to use.

``square``        four open squares: 1-interleaved, bottleneck 2.
``threebythree``  three against three rectangles: 1-interleaved, bottleneck 3.
``free4d``        the same coordinates rearranged as free R^4 modules.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional

from .interleave import RankCertificate, WeightMatrix
from .intervals import Barcode, FreeInterval, Rectangle

__all__ = ["Instance", "square", "threebythree", "free4d", "INSTANCES"]


@dataclass
class Instance:
    name: str
    M: Barcode
    N: Barcode
    witness: WeightMatrix
    d_B: Fraction
    d_I_upper: Fraction
    certificate: Optional[RankCertificate] = None
    notes: Dict[str, str] = field(default_factory=dict)


def square() -> Instance:
    M = Barcode(
        "rectangle",
        2,
        [
            ("I1", Rectangle.parse("(-3,1)x(-1,3)")),
            ("I2", Rectangle.parse("(-1,3)x(-3,1)")),
            ("I3", Rectangle.parse("(-1,1)x(-1,1)")),
        ],
    )
    N = Barcode("rectangle", 2, [("J", Rectangle.parse("(-2,2)x(-2,2)"))])
    W = WeightMatrix(
        1,
        f={("I1", "J"): 1, ("I2", "J"): 1, ("I3", "J"): 1},
        g={("J", "I1"): 1, ("J", "I2"): 1, ("J", "I3"): -1},
    )
    cert = RankCertificate(
        Fraction(9, 10), (Fraction(-19, 10),) * 2, (Fraction(19, 10),) * 2, direction="N"
    )
    return Instance("square", M, N, W, Fraction(2), Fraction(1), cert)


_F = [[1, 1, 1], [1, 1, 0], [1, 0, 1]]
_G = [[-1, 1, 1], [1, 0, -1], [1, -1, 0]]


def threebythree() -> Instance:
    M = Barcode(
        "rectangle",
        2,
        [
            ("I1", Rectangle.parse("(0,10)x(1,11)")),
            ("I2", Rectangle.parse("(0,12)x(-1,11)")),
            ("I3", Rectangle.parse("(2,10)x(1,9)")),
        ],
    )
    N = Barcode(
        "rectangle",
        2,
        [
            ("J1", Rectangle.parse("(1,11)x(0,10)")),
            ("J2", Rectangle.parse("(1,9)x(0,12)")),
            ("J3", Rectangle.parse("(-1,11)x(2,10)")),
        ],
    )
    W = WeightMatrix.from_matrices(1, M, N, _F, _G)
    return Instance(
        "threebythree",
        M,
        N,
        W,
        Fraction(3),
        Fraction(1),
        None,
        {"lower bound": "d_I >= 1 has no rank certificate; the rank invariants are too close"},
    )


def free4d() -> Instance:
    M = Barcode(
        "free",
        4,
        [
            ("I1", FreeInterval((0, 1, 10, 11))),
            ("I2", FreeInterval((0, -1, 12, 11))),
            ("I3", FreeInterval((2, 1, 10, 9))),
        ],
    )
    N = Barcode(
        "free",
        4,
        [
            ("J1", FreeInterval((1, 0, 11, 10))),
            ("J2", FreeInterval((1, 0, 9, 12))),
            ("J3", FreeInterval((-1, 2, 11, 10))),
        ],
    )
    W = WeightMatrix.from_matrices(1, M, N, _F, _G)
    a = (1, 0, 11, 10)
    cert = RankCertificate(Fraction(9, 10), a, tuple(x + 2 for x in a), direction="N")
    return Instance("free4d", M, N, W, Fraction(3), Fraction(1), cert)


INSTANCES = {"square": square, "threebythree": threebythree, "free4d": free4d}
