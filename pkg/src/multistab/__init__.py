"""Exact interleaving and bottleneck computations for rectangle-, free- and
triangle-decomposable persistence modules over R^n.

Everything is exact rational arithmetic; endpoints carry open/closed
decorations.
"""

from .decorated import (
    INF,
    MINUS,
    NEG_INF,
    PLUS,
    Decoration,
    DecoratedPoint,
    DecoratedValue,
    add,
    alpha_stats,
    compare,
    to_ext,
)
from .documents import ParseError, emit_barcode, emit_witness, load_barcode, load_witness, parse_barcode, parse_witness
from .homs import InvalidWitness, composite_nonzero, hom_nonzero, path_scalar
from .interleave import (
    NotAMatching,
    RankCertificate,
    ReplayResult,
    Verdict,
    WeightMatrix,
    check_not_interleaved,
    lemma_matrix_replay,
    mu_set,
    pair_distance,
    pair_interleaved,
    rank_invariant,
    restrict_witness_same_type,
    verify_witness,
    witness_from_matching,
)
from .intervals import (
    Barcode,
    FreeInterval,
    GeneralizedTriangle,
    Rectangle,
    Triangle,
    alpha_interval,
    alpha_leq,
    block_to_triangle,
    intersect,
    is_significant,
    same_type,
    shift_interval,
    significance_threshold,
    triviality_infimum,
)
from .matching import (
    BottleneckResult,
    InterleavingGraph,
    MatchingResult,
    bottleneck,
    build_graph,
    combine_matchings,
    cover_matching,
    matching_feasible,
)

__version__ = "0.1.0"
