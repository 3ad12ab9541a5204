"""Randomized property checks shared by the ``fuzz`` command and the test suite.

Each ``check_*`` returns a list of human-readable failure strings; an empty
list means the property held on that input.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Dict, List

from .decorated import INF, is_finite
from .homs import composite_nonzero, hom_nonzero
from .interleave import pair_distance, pair_interleaved, verify_witness, witness_from_matching
from .intervals import Barcode, shift_interval
from .matching import bottleneck, build_graph, combine_matchings, cover_matching, critical_values, matching_feasible
from .oracle import (
    MAX_BOTTLENECK_SIZE,
    build_grid,
    oracle_bottleneck,
    oracle_hom_nonzero,
    oracle_pair_interleaved,
    oracle_verify_witness,
)
from .fuzz import FuzzParams, fuzz_generate, random_interval

__all__ = [
    "check_hom",
    "check_pair",
    "check_pair_distance",
    "check_witness_oracle",
    "check_bottleneck",
    "check_matching",
    "check_monotone",
    "run_suite",
]


def check_hom(I, J, eps) -> List[str]:
    grid = build_grid([I, J], [eps])
    Js = shift_interval(J, eps)
    if hom_nonzero(I, Js) != oracle_hom_nonzero(I, J, grid, 0, eps):
        return [f"hom_nonzero({I}, {J}({eps})) disagrees with the oracle"]
    return []


def check_pair(I, J, eps) -> List[str]:
    grid = build_grid([I, J], [eps, 2 * eps])
    if pair_interleaved(I, J, eps) != oracle_pair_interleaved(I, J, eps, grid):
        return [f"pair_interleaved({I}, {J}, {eps}) disagrees with the oracle"]
    return []


def pair_distance_samples(value) -> List[Fraction]:
    """Sample points below and above ``value`` used to test the infimum."""
    if not is_finite(value):
        return [Fraction(0), Fraction(1), Fraction(17, 2)]
    out = [value + Fraction(1, 8), value + 1]
    if value > 0:
        out += [value - Fraction(1, 8) if value > Fraction(1, 8) else value / 2, Fraction(0)]
    return out


def check_pair_distance(I, J) -> List[str]:
    """``pair_distance`` is the infimum of the oracle predicate at sampled eps."""
    value, attained = pair_distance(I, J)
    errs = []
    for eps in pair_distance_samples(value):
        grid = build_grid([I, J], [eps, 2 * eps])
        expected = eps > value if is_finite(value) else False
        if oracle_pair_interleaved(I, J, eps, grid) != expected:
            errs.append(f"pair_distance({I}, {J}) = {value}, but oracle says {not expected} at {eps}")
    if is_finite(value):
        grid = build_grid([I, J], [value, 2 * value])
        if oracle_pair_interleaved(I, J, value, grid) != attained:
            errs.append(f"pair_distance({I}, {J}) attainment {attained} disagrees with the oracle")
    return errs


def check_witness_oracle(M: Barcode, N: Barcode, W) -> List[str]:
    d = W.delta
    grid = build_grid(M.intervals() + N.intervals(), [d, 2 * d])
    a = verify_witness(M, N, W)
    b = oracle_verify_witness(M, N, W, grid)
    if a.valid != b.valid or sorted(a.pairs()) != sorted(b.pairs()):
        return [f"verify_witness {a.pairs()} vs oracle {b.pairs()}"]
    return []


def check_bottleneck(M: Barcode, N: Barcode) -> List[str]:
    value, attained, found = bottleneck(M, N)
    errs = []
    if max(len(M), len(N)) <= MAX_BOTTLENECK_SIZE:
        expected = oracle_bottleneck(M, N)
        if value != expected:
            errs.append(f"bottleneck {value} but exhaustive search gives {expected}")
    if is_finite(value):
        at_value = matching_feasible(M, N, value) is not None
        if at_value != attained:
            errs.append(f"bottleneck attainment {attained} but feasibility at {value} is {at_value}")
        above = matching_feasible(M, N, value + Fraction(1, 64))
        if above is None:
            errs.append(f"no matching just above the bottleneck value {value}")
    return errs


def check_matching(M: Barcode, N: Barcode, eps) -> List[str]:
    """Combiner covers both required sets, and its witness passes verification."""
    G = build_graph(M, N, eps)
    left, right = cover_matching(G, "left"), cover_matching(G, "right")
    if not (left.found and right.found):
        for res, side in ((left, "left"), (right, "right")):
            if not res.found:
                xs, ys = res.violator
                if len(xs) <= len(ys):
                    return [f"{side} violator {sorted(xs)} has {len(ys)} neighbours"]
        return []
    pairs = combine_matchings(left.matching, right.matching, G)
    errs = []
    if len(set(pairs.values())) != len(pairs) or any((x, y) not in G.edges for x, y in pairs.items()):
        errs.append("combined matching is not a matching inside G")
    if not (G.required_left <= set(pairs) and G.required_right <= set(pairs.values())):
        errs.append("combined matching misses a required vertex")
    if not errs:
        W = witness_from_matching(M, N, pairs, eps)
        if not verify_witness(M, N, W).valid:
            errs.append(f"witness from matching {pairs} at {eps} is invalid")
    return errs


def check_monotone(M: Barcode, N: Barcode) -> List[str]:
    """Feasibility is monotone in eps on the critical values and gaps."""
    crit = critical_values(M, N)
    probes = sorted(set(crit) | {(x + y) / 2 for x, y in zip(crit, crit[1:])} | {crit[-1] + 1})
    seen = False
    for eps in probes:
        ok = matching_feasible(M, N, eps) is not None
        if seen and not ok:
            return [f"feasible below {eps} but not at {eps}"]
        seen = seen or ok
    return []


def _pair_case(rng, kind, dim):
    I = random_interval(rng, kind, dim)
    J = random_interval(rng, kind, dim)
    return I, J, Fraction(rng.randint(0, 8), 2)


def run_suite(kind: str, dim: int, count: int, seed: int) -> Dict[str, List[str]]:
    """Run every check on ``count`` seeded instances; returns failures per check."""
    failures: Dict[str, List[str]] = {}

    def record(name: str, fn: Callable[[], List[str]]):
        failures.setdefault(name, []).extend(fn())

    for k in range(count):
        rng = random.Random(f"{seed}:{k}")
        I, J, eps = _pair_case(rng, kind, dim)
        record("hom", lambda: check_hom(I, J, eps))
        record("pair", lambda: check_pair(I, J, eps))
        record("pair_distance", lambda: check_pair_distance(I, J))
        params = FuzzParams(kind=kind, dim=dim, max_size=4)
        M, N = fuzz_generate(seed * 100003 + k, params)
        record("bottleneck", lambda: check_bottleneck(M, N))
        record("monotone", lambda: check_monotone(M, N))
        record("matching", lambda: check_matching(M, N, eps))
        params.mode = "matched"
        params.max_size = 3
        Mw, Nw, W = fuzz_generate(seed * 100003 + k, params)
        if W is not None:
            record("witness", lambda: check_witness_oracle(Mw, Nw, W))
    return failures
