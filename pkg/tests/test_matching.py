import random
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from multistab.decorated import INF
from multistab.fuzz import FuzzParams, fuzz_generate
from multistab.instances import square, threebythree
from multistab.intervals import Barcode, FreeInterval, Rectangle, is_significant
from multistab.matching import (
    bottleneck,
    build_graph,
    combine_matchings,
    cover_matching,
    critical_values,
    hopcroft_karp,
    matching_feasible,
)

R = Rectangle.parse
F = Fraction


def test_square_cover_has_hall_violator_at_one():
    ins = square()
    G = build_graph(ins.M, ins.N, 1)
    res = cover_matching(G, "left")
    assert not res.found
    xs, ys = res.violator
    assert len(xs) > len(ys) and ys == {"J"} and {"I1", "I2"} <= xs
    assert matching_feasible(ins.M, ins.N, 1) is None
    # every bar is 4-trivial, so at eps 2 nothing has to be matched
    found = matching_feasible(ins.M, ins.N, 2)
    assert found is not None and len(found.unmatched) == 4 - 2 * len(found.pairs)


def test_cover_side_must_be_known():
    G = build_graph(square().M, square().N, 1)
    with pytest.raises(ValueError):
        cover_matching(G, "middle")


def test_combiner_on_a_path():
    # sigma covers I1, I2; tau covers J2, J3; the union is the path J1-I1-J2-I2-J3
    # and J1 is short enough to be left out
    M = Barcode.of([R("(0,3)"), R("(1,4)")])
    N = Barcode.of([R("(0,2)"), R("(1/2,3)"), R("(2,5)")], prefix="J")
    G = build_graph(M, N, 1)
    assert G.required_right == {"J2", "J3"}
    sigma = {"I1": "J1", "I2": "J2"}
    tau = {"J2": "I1", "J3": "I2"}
    pairs = combine_matchings(sigma, tau, G)
    assert pairs == {"I1": "J2", "I2": "J3"}
    assert len(set(pairs.values())) == len(pairs)
    assert all((x, y) in G.edges for x, y in pairs.items())
    assert G.required_left <= set(pairs) and G.required_right <= set(pairs.values())


def test_threebythree_bottleneck():
    ins = threebythree()
    value, attained, found = bottleneck(ins.M, ins.N)
    assert (value, attained) == (3, True)
    assert sorted(found.pairs) == ["I1", "I2", "I3"]
    assert matching_feasible(ins.M, ins.N, F(29, 10)) is None


def test_free_barcodes_of_different_sizes_never_match():
    M = Barcode.of([FreeInterval((0, 0))])
    N = Barcode("free", 2)
    assert tuple(bottleneck(M, N)) == (INF, False, None)


def test_empty_against_empty():
    B = Barcode("rectangle", 2)
    value, attained, found = bottleneck(B, B)
    assert (value, attained) == (0, True) and found.pairs == {}


def test_unmatched_bars_are_trivial():
    M = Barcode.of([R("(0,1)x(0,1)")])
    N = Barcode("rectangle", 2)
    res = bottleneck(M, N)
    assert (res.value, res.attained) == (F(1, 2), True)
    (side, ident, _), = res.matching.unmatched
    assert (side, ident) == ("M", "I1") and not is_significant(M["I1"], 2 * res.value)


def test_kind_mismatch():
    with pytest.raises(TypeError):
        bottleneck(Barcode.of([R("(0,1)")]), Barcode.of([FreeInterval((0,))]))


@settings(max_examples=60)
@given(st.integers(0, 10**6))
def test_hopcroft_karp_is_maximum(seed):
    rng = random.Random(seed)
    left = [f"x{i}" for i in range(rng.randint(0, 7))]
    right = [f"y{i}" for i in range(rng.randint(0, 7))]
    adj = {x: [y for y in right if rng.random() < 0.35] for x in left}
    m = hopcroft_karp(adj)
    assert all(y in adj[x] for x, y in m.items()) and len(set(m.values())) == len(m)
    g = nx.Graph()
    g.add_nodes_from(left)
    g.add_nodes_from(right)
    g.add_edges_from((x, y) for x in left for y in adj[x])
    assert len(m) == len(nx.bipartite.maximum_matching(g, top_nodes=left)) // 2


@pytest.mark.parametrize("kind,dim", [("rectangle", 1), ("rectangle", 2), ("free", 2), ("triangle", 2)])
def test_feasibility_constant_between_critical_values(kind, dim):
    for seed in range(25):
        M, N = fuzz_generate(seed, FuzzParams(kind=kind, dim=dim, max_size=4))
        crit = critical_values(M, N)
        for lo, hi in zip(crit, crit[1:]):
            probes = [lo + (hi - lo) * F(k, 4) for k in (1, 2, 3)]
            verdicts = {matching_feasible(M, N, e) is not None for e in probes}
            assert len(verdicts) == 1
