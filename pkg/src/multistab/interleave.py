"""Interleavings: pairwise decisions, witness checking and certificates.

Two interval modules ``I`` and ``J`` are eps-interleaved iff either both are
2eps-trivial (zero morphisms work) or

    A:  min_J <= min_I + eps  and  max_J <= max_I + eps
    B:  min_I <= min_J + eps  and  max_I <= max_J + eps

as decorated points.  If ``I`` is 2eps-significant the composite
``I -> J(eps) -> I(2eps)`` must be nonzero, which forces both Hom spaces to
be nonzero, i.e. A and B.  Conversely A and B put ``I & I(2eps)`` inside
``J(eps)``, so the scalar-1 morphisms compose to the internal map.
Free intervals and triangles use the same criterion on ``min`` resp. ``max``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .decorated import INF, NEG_INF, DecoratedValue, Ext, is_finite, to_ext
from .homs import InvalidWitness, hom_nonzero, path_scalar
from .intervals import (
    Barcode,
    FreeInterval,
    Interval,
    Rectangle,
    Triangle,
    _check_same,
    alpha_interval,
    contains_point,
    is_significant,
    kind_of,
    same_type,
    shift_interval,
    triviality_infimum,
)

__all__ = [
    "WeightMatrix",
    "RankCertificate",
    "Verdict",
    "Violation",
    "ReplayResult",
    "pair_interleaved",
    "pair_distance",
    "verify_witness",
    "witness_from_matching",
    "restrict_witness_same_type",
    "rank_invariant",
    "check_not_interleaved",
    "lemma_matrix_replay",
    "mu_set",
    "NotAMatching",
]


class NotAMatching(ValueError):
    pass


# -- pairwise ------------------------------------------------------------------


def _check_eps(eps) -> Fraction:
    eps = Fraction(eps)
    if eps < 0:
        raise ValueError(f"eps must be nonnegative, got {eps}")
    return eps


def _shift_condition(I: Interval, J: Interval, eps: Fraction) -> bool:
    """A-condition: the corners of J sit below those of I shifted up by eps."""
    if isinstance(I, Rectangle):
        return J.min <= I.min.shifted(eps) and J.max <= I.max.shifted(eps)
    if isinstance(I, FreeInterval):
        return all(mj <= mi + eps for mi, mj in zip(I.min, J.min))
    return J.a <= I.a + eps and J.b <= I.b + eps


def pair_interleaved(I: Interval, J: Interval, eps) -> bool:
    _check_same(I, J)
    eps = _check_eps(eps)
    if not is_significant(I, 2 * eps) and not is_significant(J, 2 * eps):
        return True
    return _shift_condition(I, J, eps) and _shift_condition(J, I, eps)


def _gap(x: Ext, y: Ext) -> Ext:
    """``inf {eps >= 0 : x <= y + eps}`` on undecorated values."""
    if x == y or x == NEG_INF or y == INF:
        return Fraction(0)
    if x == INF or y == NEG_INF:
        return INF
    return max(Fraction(0), x - y)


def _endpoint_pairs(I: Interval, J: Interval) -> List[Tuple[Ext, Ext]]:
    if isinstance(I, Rectangle):
        return [(p.value, q.value) for p, q in zip(I.min, J.min)] + [
            (p.value, q.value) for p, q in zip(I.max, J.max)
        ]
    if isinstance(I, FreeInterval):
        return list(zip(I.min, J.min))
    return [(I.a, J.a), (I.b, J.b)]


def pair_distance(I: Interval, J: Interval) -> Tuple[Ext, bool]:
    """``(inf {eps : I, J eps-interleaved}, attained)``."""
    _check_same(I, J)
    s = max((max(_gap(x, y), _gap(y, x)) for x, y in _endpoint_pairs(I, J)), default=Fraction(0))
    t = max(triviality_infimum(I), triviality_infimum(J))
    value = min(s, t)
    if not is_finite(value):
        return INF, False
    return value, pair_interleaved(I, J, value)


# -- witnesses -------------------------------------------------------------------


@dataclass
class WeightMatrix:
    """Scalars of ``f_{I,J}: I -> J(delta)`` and ``g_{J,I}: J -> I(delta)``.

    ``f`` is keyed ``(id in M, id in N)`` and ``g`` keyed ``(id in N, id in M)``;
    absent entries are zero.
    """

    delta: Fraction
    f: Dict[Tuple[str, str], Fraction] = field(default_factory=dict)
    g: Dict[Tuple[str, str], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        self.delta = _check_eps(self.delta)
        self.f = {(str(a), str(b)): Fraction(w) for (a, b), w in self.f.items() if Fraction(w) != 0}
        self.g = {(str(a), str(b)): Fraction(w) for (a, b), w in self.g.items() if Fraction(w) != 0}

    @classmethod
    def from_matrices(cls, delta, M: Barcode, N: Barcode, f_rows, g_rows) -> WeightMatrix:
        """``f_rows[i][j] = w(I_i, J_j)`` and ``g_rows[j][i] = w(J_j, I_i)`` in barcode order."""
        mids, nids = M.ids(), N.ids()
        f = {(mids[i], nids[j]): w for i, row in enumerate(f_rows) for j, w in enumerate(row)}
        g = {(nids[j], mids[i]): w for j, row in enumerate(g_rows) for i, w in enumerate(row)}
        return cls(delta, f, g)

    def is_empty(self) -> bool:
        return not self.f and not self.g


@dataclass(frozen=True)
class Violation:
    side: str  # "M" or "N"
    source: str
    target: str
    got: Fraction
    expected: Fraction

    def __str__(self):
        return f"{self.side}: ({self.source}, {self.target}) sums to {self.got}, expected {self.expected}"


@dataclass
class Verdict:
    violations: List[Violation] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.valid

    def pairs(self) -> List[Tuple[str, str]]:
        return [(v.source, v.target) for v in self.violations]


def _check_weights(M: Barcode, N: Barcode, W: WeightMatrix):
    for (i, j), w in W.f.items():
        if i not in M or j not in N:
            raise InvalidWitness(f"f entry ({i}, {j}) does not name intervals of M and N")
        if not hom_nonzero(M[i], shift_interval(N[j], W.delta)):
            raise InvalidWitness(f"f entry ({i}, {j}) = {w} but Hom({i}, {j}({W.delta})) = 0")
    for (j, i), w in W.g.items():
        if j not in N or i not in M:
            raise InvalidWitness(f"g entry ({j}, {i}) does not name intervals of N and M")
        if not hom_nonzero(N[j], shift_interval(M[i], W.delta)):
            raise InvalidWitness(f"g entry ({j}, {i}) = {w} but Hom({j}, {i}({W.delta})) = 0")


def _side(side, A: Barcode, B: Barcode, there, back, delta) -> List[Violation]:
    out = []
    for x, X in A:
        outgoing = [(y, w) for (a, y), w in there.items() if a == x]
        for x2, X2 in A:
            K = shift_interval(X2, 2 * delta)
            if not hom_nonzero(X, K):
                continue
            total = Fraction(0)
            for y, wf in outgoing:
                wg = back.get((y, x2))
                if wg:
                    total += path_scalar(wf, wg, X, shift_interval(B[y], delta), K)
            expected = Fraction(1 if x == x2 else 0)
            if total != expected:
                out.append(Violation(side, x, x2, total, expected))
    return out


def verify_witness(M: Barcode, N: Barcode, W: WeightMatrix) -> Verdict:
    """Check ``g(delta) f = phi_{M,2delta}`` and ``f(delta) g = phi_{N,2delta}``.

    Component by component: for ``X, X'`` in ``B(M)`` with
    ``Hom(X, X'(2delta)) != 0`` the path scalars ``X -> J(delta) -> X'(2delta)``
    must sum to 1 if ``X == X'`` and to 0 otherwise; likewise for ``B(N)``.
    """
    if M.kind != N.kind or M.dim != N.dim:
        raise TypeError("barcodes of different kind or dimension")
    _check_weights(M, N, W)
    return Verdict(
        _side("M", M, N, W.f, W.g, W.delta) + _side("N", N, M, W.g, W.f, W.delta)
    )


def _check_matching(M: Barcode, N: Barcode, sigma: Mapping[str, str], eps: Fraction):
    if len(set(sigma.values())) != len(sigma):
        raise NotAMatching("sigma is not injective")
    for i, j in sigma.items():
        if i not in M or j not in N:
            raise NotAMatching(f"unknown ids in pair ({i}, {j})")
        if not pair_interleaved(M[i], N[j], eps):
            raise NotAMatching(f"{i} and {j} are not {eps}-interleaved")
    matched_n = set(sigma.values())
    for ident, I in M:
        if ident not in sigma and is_significant(I, 2 * eps):
            raise NotAMatching(f"{ident} is unmatched but {2 * eps}-significant")
    for ident, J in N:
        if ident not in matched_n and is_significant(J, 2 * eps):
            raise NotAMatching(f"{ident} is unmatched but {2 * eps}-significant")


def witness_from_matching(M: Barcode, N: Barcode, sigma: Mapping[str, str], eps) -> WeightMatrix:
    """Interleaving weights induced by an eps-matching ``sigma: M -/-> N``.

    Matched pairs get weight 1 wherever the Hom space is nonzero; a zero Hom
    space only occurs between 2eps-trivial pairs, where zero maps suffice.
    """
    eps = _check_eps(eps)
    _check_matching(M, N, sigma, eps)
    f, g = {}, {}
    for i, j in sigma.items():
        if hom_nonzero(M[i], shift_interval(N[j], eps)):
            f[(i, j)] = 1
        if hom_nonzero(N[j], shift_interval(M[i], eps)):
            g[(j, i)] = 1
    return WeightMatrix(eps, f, g)


def restrict_witness_same_type(W: WeightMatrix, M: Barcode, N: Barcode) -> WeightMatrix:
    """Drop every weight between rectangles of different types."""
    if M.kind != "rectangle" or N.kind != "rectangle":
        raise TypeError("type restriction is defined for rectangle barcodes")
    if not verify_witness(M, N, W).valid:
        raise InvalidWitness("input witness does not satisfy the interleaving equations")
    return WeightMatrix(
        W.delta,
        {k: w for k, w in W.f.items() if same_type(M[k[0]], N[k[1]])},
        {k: w for k, w in W.g.items() if same_type(N[k[0]], M[k[1]])},
    )


# -- rank certificates -------------------------------------------------------------


@dataclass(frozen=True)
class RankCertificate:
    """Points ``a <= b - 2 eps`` with ``rk phi_N(a, b) > rk phi_M(a + eps, b - eps)``.

    ``direction`` names the module playing ``N`` (``"N"`` or ``"M"``).
    """

    eps: Fraction
    a: Tuple[Fraction, ...]
    b: Tuple[Fraction, ...]
    direction: str = "N"

    def __post_init__(self):
        object.__setattr__(self, "eps", Fraction(self.eps))
        object.__setattr__(self, "a", tuple(Fraction(x) for x in self.a))
        object.__setattr__(self, "b", tuple(Fraction(x) for x in self.b))
        if self.direction not in ("N", "M"):
            raise ValueError("direction must be 'N' or 'M'")
        if self.eps < 0 or len(self.a) != len(self.b):
            raise ValueError("malformed certificate")
        if any(bi < ai + 2 * self.eps for ai, bi in zip(self.a, self.b)):
            raise ValueError("certificate needs b >= a + 2 eps")


def rank_invariant(B: Barcode, p: Sequence, q: Sequence) -> int:
    """Rank of ``phi(p, q)``: the number of bars containing both points."""
    p = [to_ext(x) for x in p]
    q = [to_ext(x) for x in q]
    if len(p) != B.dim or len(q) != B.dim:
        raise ValueError("points have the wrong dimension")
    if any(x > y for x, y in zip(p, q)):
        raise ValueError("rank invariant needs p <= q")
    return sum(1 for _, I in B if contains_point(I, p) and contains_point(I, q))


def check_not_interleaved(M: Barcode, N: Barcode, cert: RankCertificate) -> bool:
    """True certifies that M and N are not ``cert.eps``-interleaved.

    An interleaving factors ``phi_N(a, b)`` as ``f . phi_M(a+eps, b-eps) . g``.
    """
    if cert.direction == "M":
        M, N = N, M
    if len(cert.a) != M.dim:
        raise ValueError("certificate points have the wrong dimension")
    e = cert.eps
    lo = [x + e for x in cert.a]
    hi = [x - e for x in cert.b]
    return rank_invariant(N, cert.a, cert.b) > rank_invariant(M, lo, hi)


# -- counting lemma ------------------------------------------------------------------


def mu_set(I: Interval, B: Barcode, eps) -> List[str]:
    """Ids of bars in ``B`` that are eps-interleaved with ``I``."""
    if B.kind != kind_of(I):
        raise TypeError("kind mismatch")
    return [j for j, J in B if pair_interleaved(I, J, eps)]


@dataclass
class ReplayResult:
    order: List[str]
    mu: List[str]
    matrix: List[List[Fraction]]
    passed: bool

    def format(self) -> str:
        width = max((len(str(x)) for row in self.matrix for x in row), default=1)
        lines = [f"order: {' <= '.join(self.order)}", f"mu(A): {', '.join(self.mu)}"]
        for row in self.matrix:
            lines.append("[ " + " ".join(str(x).rjust(width) for x in row) + " ]")
        lines.append("pass" if self.passed else "FAIL")
        return "\n".join(lines)


def lemma_matrix_replay(M: Barcode, N: Barcode, W: WeightMatrix, A: Iterable[str], factor) -> ReplayResult:
    """Rebuild the weight product ``G F`` over ``A`` (sorted by alpha) and ``mu(A)``.

    Entry ``(r, c)`` is ``sum_J w(J, A_r) w(A_c, J)`` over ``J`` in ``mu(A)``.
    Passing means zeros below a unit diagonal, hence ``|A| <= |mu(A)|``.
    """
    factor = Fraction(factor)
    A = list(A)
    if len(set(A)) != len(A) or any(a not in M for a in A):
        raise ValueError("A must be a set of ids from B(M)")
    if not verify_witness(M, N, W).valid:
        raise InvalidWitness("witness does not satisfy the interleaving equations")
    radius = factor * W.delta
    for a in A:
        if not is_significant(M[a], 2 * radius):
            raise ValueError(f"{a} is {2 * radius}-trivial; A must avoid such bars")
    position = {a: k for k, a in enumerate(A)}
    order = sorted(A, key=lambda a: (*alpha_interval(M[a]), position[a]))
    in_mu = set()
    for a in order:
        in_mu.update(mu_set(M[a], N, radius))
    mu = [j for j in N.ids() if j in in_mu]
    matrix = [
        [
            sum(
                (W.g.get((j, row), Fraction(0)) * W.f.get((col, j), Fraction(0)) for j in mu),
                Fraction(0),
            )
            for col in order
        ]
        for row in order
    ]
    r = len(order)
    passed = all(matrix[i][i] == 1 for i in range(r)) and all(
        matrix[i][k] == 0 for i in range(r) for k in range(i)
    )
    return ReplayResult(order, mu, matrix, passed)
