"""Acceptance criteria, one test each; every test prints a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v`` or
``python tests/test_acceptance.py``.  All comparisons are exact.
"""

from __future__ import annotations

import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import lemma_suites  # noqa: E402
from multistab import (  # noqa: E402
    Barcode,
    RankCertificate,
    Rectangle,
    WeightMatrix,
    bottleneck,
    check_not_interleaved,
    lemma_matrix_replay,
    pair_distance,
    verify_witness,
)
from multistab.documents import bundled_path, load_barcode, load_witness  # noqa: E402
from multistab.fuzz import FuzzParams, fuzz_generate, random_barcode, random_interval, random_witness  # noqa: E402
from multistab.instances import INSTANCES  # noqa: E402
from multistab.intervals import FreeInterval  # noqa: E402
from multistab.properties import (  # noqa: E402
    check_bottleneck,
    check_hom,
    check_matching,
    check_monotone,
    check_pair,
    check_pair_distance,
    check_witness_oracle,
)

F = Fraction
RESULTS = {}


def report(number: int, title: str, ok: bool, detail: str):
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number}: {title} -- {detail}"
    RESULTS[number] = line
    print(line)
    assert ok, line


def rect(text):
    return Rectangle.parse(text)


# -- 1-3: the worked examples ---------------------------------------------------------


def test_criterion_1_square():
    M = Barcode("rectangle", 2, [("I1", rect("(-3,1)x(-1,3)")), ("I2", rect("(-1,3)x(-3,1)")),
                                 ("I3", rect("(-1,1)x(-1,1)"))])
    N = Barcode("rectangle", 2, [("J", rect("(-2,2)x(-2,2)"))])
    W = WeightMatrix(1, {("I1", "J"): 1, ("I2", "J"): 1, ("I3", "J"): 1},
                     {("J", "I1"): 1, ("J", "I2"): 1, ("J", "I3"): -1})
    t = time.perf_counter()
    valid = verify_witness(M, N, W).valid
    value, attained, _ = bottleneck(M, N)
    cert = RankCertificate(F(9, 10), (F(-19, 10),) * 2, (F(19, 10),) * 2)
    certified = check_not_interleaved(M, N, cert)
    elapsed = time.perf_counter() - t
    bundled = INSTANCES["square"]()
    files_agree = (load_barcode(bundled_path("square_M.json")) == M == bundled.M
                   and load_barcode(bundled_path("square_N.json")) == N == bundled.N
                   and load_witness(bundled_path("square_W.json")) == W == bundled.witness)
    ok = valid and (value, attained) == (2, True) and certified and files_agree and elapsed < 1
    report(1, "square", ok,
           f"witness valid={valid} at delta=1, d_B=({value}, attained={attained}), "
           f"not 9/10-interleaved={certified}, bundled data agrees={files_agree}, {elapsed:.3f}s")


def test_criterion_2_threebythree():
    M = Barcode("rectangle", 2, [("I1", rect("(0,10)x(1,11)")), ("I2", rect("(0,12)x(-1,11)")),
                                 ("I3", rect("(2,10)x(1,9)"))])
    N = Barcode("rectangle", 2, [("J1", rect("(1,11)x(0,10)")), ("J2", rect("(1,9)x(0,12)")),
                                 ("J3", rect("(-1,11)x(2,10)"))])
    W = WeightMatrix.from_matrices(1, M, N, [[1, 1, 1], [1, 1, 0], [1, 0, 1]],
                                   [[-1, 1, 1], [1, 0, -1], [1, -1, 0]])
    valid = verify_witness(M, N, W).valid
    value, attained, _ = bottleneck(M, N)
    replay = lemma_matrix_replay(M, N, W, ["I1", "I2", "I3"], 3)
    bundled = INSTANCES["threebythree"]()
    files_agree = bundled.M == M and bundled.N == N and bundled.witness == W
    ok = valid and (value, attained) == (3, True) and replay.passed and files_agree
    report(2, "threebythree", ok,
           f"witness valid={valid} at delta=1, d_B=({value}, attained={attained}), "
           f"lemma replay matrix={[[str(x) for x in row] for row in replay.matrix]} passed={replay.passed}; "
           f"d_I >= 1 not certified (no rank certificate exists)")


def test_criterion_3_free4d():
    M = Barcode("free", 4, [("I1", FreeInterval((0, 1, 10, 11))), ("I2", FreeInterval((0, -1, 12, 11))),
                            ("I3", FreeInterval((2, 1, 10, 9)))])
    N = Barcode("free", 4, [("J1", FreeInterval((1, 0, 11, 10))), ("J2", FreeInterval((1, 0, 9, 12))),
                            ("J3", FreeInterval((-1, 2, 11, 10)))])
    W = WeightMatrix.from_matrices(1, M, N, [[1, 1, 1], [1, 1, 0], [1, 0, 1]],
                                   [[-1, 1, 1], [1, 0, -1], [1, -1, 0]])
    valid = verify_witness(M, N, W).valid
    value, attained, _ = bottleneck(M, N)
    a = (1, 0, 11, 10)
    certified = check_not_interleaved(M, N, RankCertificate(F(9, 10), a, tuple(x + 2 for x in a)))
    ok = valid and (value, attained) == (3, True) and certified
    report(3, "free4d", ok,
           f"witness valid={valid} at delta=1, d_B=({value}, attained={attained}), "
           f"not 9/10-interleaved={certified}")


# -- 4-5: agreement with the brute-force oracles ------------------------------------------

ORACLE_CASES = [("rectangle", 1), ("rectangle", 2), ("rectangle", 3),
                ("free", 2), ("free", 3), ("free", 4), ("triangle", 2)]


def _witness_case(k: int, kind: str, dim: int):
    """Even seeds: witness built from a matching (valid); odd: random weights."""
    size = 2 if (kind, dim) == ("free", 4) else 3
    if k % 2 == 0:
        M, N, W = fuzz_generate(k, FuzzParams(kind=kind, dim=dim, max_size=size, mode="matched"))
        if W is not None:
            return M, N, W
    rng = random.Random(f"witness:{k}")
    M = random_barcode(rng, kind, dim, rng.randint(1, size), "I")
    N = random_barcode(rng, kind, dim, rng.randint(1, size), "J")
    return M, N, random_witness(rng, M, N, F(rng.randint(0, 4), 2))


def test_criterion_4_oracle_equivalence():
    n = 200
    counts, failures = {}, []
    valid_seen = invalid_seen = 0
    for kind, dim in ORACLE_CASES:
        rng = random.Random(f"{kind}{dim}")
        for k in range(n):
            I, J = random_interval(rng, kind, dim), random_interval(rng, kind, dim)
            eps = F(rng.randint(0, 8), 2)
            failures += check_hom(I, J, eps) + check_pair(I, J, eps) + check_pair_distance(I, J)
            M, N, W = _witness_case(k, kind, dim)
            if verify_witness(M, N, W).valid:
                valid_seen += 1
            else:
                invalid_seen += 1
            failures += check_witness_oracle(M, N, W)
        counts[f"{kind}{dim}"] = n
    report(4, "oracle equivalence", not failures,
           f"{n} instances each for {', '.join(counts)} x (hom, pair, pair_distance, verify_witness); "
           f"witness verdicts {valid_seen} valid / {invalid_seen} invalid; {len(failures)} disagreements"
           + (f"; first: {failures[0]}" if failures else ""))


def test_criterion_5_bottleneck_exact():
    cases = [("rectangle", 1), ("rectangle", 2), ("free", 2), ("free", 3), ("triangle", 2)]
    per, failures, total, attained_false = 30, [], 0, 0
    for kind, dim in cases:
        for k in range(per):
            M, N = fuzz_generate(1000 + k, FuzzParams(kind=kind, dim=dim, max_size=5))
            failures += check_bottleneck(M, N)
            attained_false += not bottleneck(M, N).attained
            total += 1
    report(5, "bottleneck exactness", not failures and total >= 100,
           f"{total} instances (<= 5 bars per side, {len(cases)} kind/dim pairs), "
           f"{attained_false} with unattained infimum; {len(failures)} disagreements with exhaustive search"
           + (f"; first: {failures[0]}" if failures else ""))


# -- 6: structural lemmas ------------------------------------------------------------------


def test_criterion_6_lemma_suites():
    n = 1000
    suites = {
        "type-splitting": lemma_suites.type_splitting,
        "rectangle closeness (2n-1)": lemma_suites.rectangle_closeness,
        "rectangle composite (4n-2)": lemma_suites.rectangle_composite,
        "free closeness (n-1)": lemma_suites.free_closeness,
        "triangle closeness": lemma_suites.triangle_closeness,
        "triangle composite": lemma_suites.triangle_composite,
    }
    parts, bad_total, short = [], 0, []
    for name, fn in suites.items():
        hits, bad = fn(n, seed=11)
        bad_total += len(bad)
        parts.append(f"{name}: {hits} chains, {len(bad)} counterexamples")
        # type-splitting hypotheses are never jointly satisfiable; it checks n triples regardless
        if name != "type-splitting" and hits < n:
            short.append(name)
    report(6, "lemma property suites", bad_total == 0 and not short,
           f"{n} triples each; " + "; ".join(parts)
           + (f"; too few hypothesis hits: {short}" if short else ""))


# -- 7-9: matching machinery, n = 1 stability, unattained infimum ----------------------------


def test_criterion_7_matching_machinery():
    failures, graphs = [], 0
    kinds = [("rectangle", 1), ("rectangle", 2), ("free", 2), ("triangle", 2)]
    for k in range(500):
        kind, dim = kinds[k % len(kinds)]
        M, N = fuzz_generate(5000 + k, FuzzParams(kind=kind, dim=dim, max_size=5))
        eps = F(random.Random(k).randint(0, 8), 2)
        failures += check_matching(M, N, eps)
        if k < 200:
            failures += check_monotone(M, N)
        graphs += 1
    report(7, "matching machinery", not failures,
           f"{graphs} graphs: combiner covers both required sets and witness_from_matching verifies; "
           f"feasibility monotone on 200 instances; {len(failures)} failures"
           + (f"; first: {failures[0]}" if failures else ""))


def test_criterion_8_n1_stability():
    worst_gap, violations, trials = None, [], 200
    for k in range(trials):
        delta = F(random.Random(k).randint(1, 4), 2)
        M, N = fuzz_generate(9000 + k, FuzzParams(kind="rectangle", dim=1, max_size=5, mode="perturb", delta=delta))
        value = bottleneck(M, N).value
        if not value <= delta:
            violations.append((k, value, delta))
        gap = delta - value if value <= delta else None
        if gap is not None and (worst_gap is None or gap < worst_gap):
            worst_gap = gap
    report(8, "n = 1 stability", not violations,
           f"{trials} delta-perturbations, d_B <= delta in all but {len(violations)}; smallest slack {worst_gap}")


def test_criterion_9_unattained_infimum():
    closed, open_ = rect("[0,1]x[0,1]"), rect("(0,1)x(0,1)")
    pd = pair_distance(closed, open_)
    b = bottleneck(Barcode.of([closed]), Barcode.of([open_], prefix="J"))
    ok = pd == (0, False) and (b.value, b.attained) == (0, False)
    report(9, "unattained infimum", ok,
           f"pair_distance={pd[0]} attained={pd[1]}; bottleneck={b.value} attained={b.attained}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
