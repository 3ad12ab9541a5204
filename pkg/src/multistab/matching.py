"""eps-matchings between barcodes and the exact bottleneck distance.

An eps-matching is a matching in the bipartite graph ``G_eps`` (edges join
eps-interleaved bars) covering every 2eps-significant bar on both sides.
One-sided covers come from Hopcroft-Karp restricted to the required
vertices of one side; when no cover exists, a Hall violator is read off the
alternating forest of the last search.  Two one-sided covers are merged
component by component of their union.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Hashable, List, Mapping, Optional, Sequence, Set, Tuple

from .decorated import INF, Ext, is_finite
from .interleave import pair_interleaved
from .intervals import (
    Barcode,
    FreeInterval,
    Rectangle,
    is_significant,
    significance_threshold,
    triviality_infimum,
)

__all__ = [
    "InterleavingGraph",
    "MatchingResult",
    "CoverResult",
    "BottleneckResult",
    "hopcroft_karp",
    "build_graph",
    "cover_matching",
    "combine_matchings",
    "matching_feasible",
    "critical_values",
    "bottleneck",
]


# -- Hopcroft-Karp -------------------------------------------------------------


def hopcroft_karp(adj: Mapping[Hashable, Sequence[Hashable]]) -> Dict[Hashable, Hashable]:
    """Maximum matching of a bipartite graph given as ``left -> [right, ...]``.

    Returns ``{left: right}``.  Iteration order of ``adj`` and of each
    neighbour list fixes the result, so equal inputs give equal outputs.
    """
    left = list(adj)
    pair_l: Dict[Hashable, Hashable] = {}
    pair_r: Dict[Hashable, Hashable] = {}
    dist: Dict[Hashable, float] = {}
    unreached = len(left) + 1

    def bfs() -> bool:
        queue = deque()
        for x in left:
            if x in pair_l:
                dist[x] = unreached
            else:
                dist[x] = 0
                queue.append(x)
        found = False
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                z = pair_r.get(y)
                if z is None:
                    found = True
                elif dist[z] == unreached:
                    dist[z] = dist[x] + 1
                    queue.append(z)
        return found

    def dfs(x) -> bool:
        for y in adj[x]:
            z = pair_r.get(y)
            if z is None or (dist[z] == dist[x] + 1 and dfs(z)):
                pair_l[x] = y
                pair_r[y] = x
                return True
        dist[x] = unreached
        return False

    while bfs():
        for x in left:
            if x not in pair_l:
                dfs(x)
    return pair_l


def _hall_violator(adj, matching: Mapping) -> Tuple[Set, Set]:
    """``(X, N(X))`` with ``|X| > |N(X)|`` from an unmatched left vertex.

    Everything reachable by alternating paths from an uncovered vertex of a
    maximum matching: all reached right vertices are matched (else the path
    would augment), and they are matched into ``X``.
    """
    back = {y: x for x, y in matching.items()}
    start = next(x for x in adj if x not in matching)
    xs, ys = {start}, set()
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y in ys:
                continue
            ys.add(y)
            z = back[y]
            if z not in xs:
                xs.add(z)
                queue.append(z)
    return xs, ys


# -- graphs and matchings --------------------------------------------------------


@dataclass
class InterleavingGraph:
    left: List[str]
    right: List[str]
    eps: Fraction
    edges: FrozenSet[Tuple[str, str]]
    required_left: FrozenSet[str]
    required_right: FrozenSet[str]

    def neighbors_left(self, x: str) -> List[str]:
        return [y for y in self.right if (x, y) in self.edges]

    def neighbors_right(self, y: str) -> List[str]:
        return [x for x in self.left if (x, y) in self.edges]


@dataclass
class MatchingResult:
    """A partial bijection ``pairs: M -/-> N`` plus evidence for unmatched bars.

    ``unmatched`` lists ``(side, id, significance threshold)``; every such
    threshold lies below ``2 * eps``.
    """

    pairs: Dict[str, str]
    eps: Fraction
    unmatched: List[Tuple[str, str, object]] = field(default_factory=list)


@dataclass
class CoverResult:
    """Outcome of a one-sided cover: a matching or a Hall violator."""

    matching: Optional[Dict[str, str]]
    violator: Optional[Tuple[Set[str], Set[str]]] = None

    @property
    def found(self) -> bool:
        return self.matching is not None


def build_graph(M: Barcode, N: Barcode, eps) -> InterleavingGraph:
    if M.kind != N.kind or M.dim != N.dim:
        raise TypeError("barcodes of different kind or dimension")
    eps = Fraction(eps)
    edges = frozenset((i, j) for i, I in M for j, J in N if pair_interleaved(I, J, eps))
    return InterleavingGraph(
        left=M.ids(),
        right=N.ids(),
        eps=eps,
        edges=edges,
        required_left=frozenset(i for i, I in M if is_significant(I, 2 * eps)),
        required_right=frozenset(j for j, J in N if is_significant(J, 2 * eps)),
    )


def cover_matching(G: InterleavingGraph, side: str = "left") -> CoverResult:
    """A matching of ``G`` covering the required vertices of ``side``.

    The returned matching is keyed by that side's ids.
    """
    if side == "left":
        adj = {x: G.neighbors_left(x) for x in G.left if x in G.required_left}
    elif side == "right":
        adj = {y: G.neighbors_right(y) for y in G.right if y in G.required_right}
    else:
        raise ValueError("side must be 'left' or 'right'")
    m = hopcroft_karp(adj)
    if len(m) == len(adj):
        return CoverResult(dict(m))
    return CoverResult(None, _hall_violator(adj, m))


def _components(sigma: Mapping[str, str], tau: Mapping[str, str]):
    """Connected components of the union of both matchings, as vertex sets.

    Vertices are tagged ``("L", id)`` / ``("R", id)``.
    """
    nbrs: Dict[Tuple[str, str], Set[Tuple[str, str]]] = {}
    for x, y in sigma.items():
        nbrs.setdefault(("L", x), set()).add(("R", y))
        nbrs.setdefault(("R", y), set()).add(("L", x))
    for y, x in tau.items():
        nbrs.setdefault(("L", x), set()).add(("R", y))
        nbrs.setdefault(("R", y), set()).add(("L", x))
    seen: Set = set()
    for v in nbrs:
        if v in seen:
            continue
        comp, stack = set(), [v]
        while stack:
            w = stack.pop()
            if w in comp:
                continue
            comp.add(w)
            stack.extend(nbrs[w] - comp)
        seen |= comp
        yield comp


def combine_matchings(sigma: Mapping[str, str], tau: Mapping[str, str], G: InterleavingGraph) -> Dict[str, str]:
    """Merge a left cover ``sigma: L -> R`` and a right cover ``tau: R -> L``.

    Each component of ``sigma | tau`` is a path or an even cycle.  If
    ``sigma`` misses a required vertex ``J`` of a component, that component
    is the walk ``J, tau(J), sigma(tau(J)), ...`` whose last vertex is not
    required, so ``tau`` covers it instead.
    """
    for x, y in sigma.items():
        if (x, y) not in G.edges:
            raise ValueError(f"sigma uses a non-edge ({x}, {y})")
    for y, x in tau.items():
        if (x, y) not in G.edges:
            raise ValueError(f"tau uses a non-edge ({x}, {y})")
    if not G.required_left <= set(sigma):
        raise ValueError("sigma does not cover the required left vertices")
    if not G.required_right <= set(tau):
        raise ValueError("tau does not cover the required right vertices")

    result: Dict[str, str] = {}
    for comp in _components(sigma, tau):
        required = {v for v in comp if (v[0] == "L" and v[1] in G.required_left)
                    or (v[0] == "R" and v[1] in G.required_right)}
        sig = {x: y for x, y in sigma.items() if ("L", x) in comp}
        if required <= {("L", x) for x in sig} | {("R", y) for y in sig.values()}:
            result.update(sig)
            continue
        ta = {x: y for y, x in tau.items() if ("R", y) in comp}
        if required <= {("L", x) for x in ta} | {("R", y) for y in ta.values()}:
            result.update(ta)
            continue
        raise AssertionError("neither matching covers a component")  # pragma: no cover
    return result


def _unmatched(M: Barcode, N: Barcode, pairs: Mapping[str, str]):
    used = set(pairs.values())
    out = [("M", i, significance_threshold(I)) for i, I in M if i not in pairs]
    out += [("N", j, significance_threshold(J)) for j, J in N if j not in used]
    return out


def matching_feasible(M: Barcode, N: Barcode, eps) -> Optional[MatchingResult]:
    """Some eps-matching between ``B(M)`` and ``B(N)``, or ``None``."""
    G = build_graph(M, N, eps)
    left = cover_matching(G, "left")
    if not left.found:
        return None
    right = cover_matching(G, "right")
    if not right.found:
        return None
    pairs = combine_matchings(left.matching, right.matching, G)
    pairs = {x: pairs[x] for x in G.left if x in pairs}
    return MatchingResult(pairs, G.eps, _unmatched(M, N, pairs))


# -- bottleneck -------------------------------------------------------------------


def critical_values(M: Barcode, N: Barcode) -> List[Fraction]:
    """Sorted finite values of eps where some edge or requirement can flip."""
    vals: Set[Fraction] = {Fraction(0)}

    def coords(I):
        if isinstance(I, Rectangle):
            return [c.value for c in I.min] + [c.value for c in I.max]
        if isinstance(I, FreeInterval):
            return list(I.min)
        return [I.a, I.b]

    for _, I in M:
        ci = coords(I)
        for _, J in N:
            for x, y in zip(ci, coords(J)):
                if is_finite(x) and is_finite(y):
                    vals.add(abs(x - y))
    for B in (M, N):
        for _, I in B:
            t = triviality_infimum(I)
            if is_finite(t):
                vals.add(t)
    return sorted(vals)


@dataclass
class BottleneckResult:
    value: Ext
    attained: bool
    matching: Optional[MatchingResult]

    def __iter__(self):
        return iter((self.value, self.attained, self.matching))


def bottleneck(M: Barcode, N: Barcode) -> BottleneckResult:
    """``inf {eps : M and N are eps-matched}`` with attainment.

    Feasibility is monotone in eps and constant between consecutive critical
    values, so a binary search over the critical set plus one probe in the
    gap below the first feasible value decides both the infimum and whether
    it is attained.  The matching is taken at the value itself when attained
    and at the probe otherwise.
    """
    if M.kind != N.kind or M.dim != N.dim:
        raise TypeError("barcodes of different kind or dimension")
    crit = critical_values(M, N)
    lo, hi = 0, len(crit)
    while lo < hi:
        mid = (lo + hi) // 2
        if matching_feasible(M, N, crit[mid]) is not None:
            hi = mid
        else:
            lo = mid + 1
    k = lo
    if k == len(crit):
        probe = crit[-1] + 1
        found = matching_feasible(M, N, probe)
        if found is None:
            return BottleneckResult(INF, False, None)
        return BottleneckResult(crit[-1], False, found)
    if k > 0:
        probe = (crit[k - 1] + crit[k]) / 2
        found = matching_feasible(M, N, probe)
        if found is not None:
            return BottleneckResult(crit[k - 1], False, found)
    return BottleneckResult(crit[k], True, matching_feasible(M, N, crit[k]))
