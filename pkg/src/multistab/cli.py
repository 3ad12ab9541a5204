"""Command line interface: ``multistab <command> ...``.

Exit codes: 0 success, 1 property falsified or invalid witness, 2 usage,
3 parse error, 4 instance too large.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .decorated import ext_str, to_ext
from .documents import ParseError, emit_barcode, emit_witness, load_barcode, load_witness
from .instances import INSTANCES
from .interleave import (
    InvalidWitness,
    RankCertificate,
    check_not_interleaved,
    lemma_matrix_replay,
    pair_distance,
    verify_witness,
)
from .intervals import KINDS
from .matching import bottleneck
from .oracle import InadequateGrid, InstanceTooLarge, build_grid, oracle_bottleneck, oracle_verify_witness
from .properties import run_suite
from .render import render_svg

OK, FALSIFIED, USAGE, PARSE, TOO_LARGE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        x = to_ext(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None
    if not isinstance(x, Fraction):
        raise argparse.ArgumentTypeError("value must be finite")
    return x


def _point(text: str) -> tuple:
    return tuple(_rational(t) for t in text.split(","))


def _bar_ref(text: str):
    """``FILE:ID`` or ``FILE.ID`` (split at the last separator)."""
    sep = ":" if ":" in text else "."
    path, _, ident = text.rpartition(sep)
    if not path or not ident:
        raise UsageError(f"expected FILE:ID, got {text!r}")
    B = load_barcode(path)
    if ident not in B:
        raise UsageError(f"{path} has no interval {ident!r}")
    return B, B[ident]


def _fmt_matching(result) -> str:
    if result is None:
        return "none"
    if not result.pairs:
        return "{}"
    return "{" + ", ".join(f"{a}->{b}" for a, b in result.pairs.items()) + "}"


def cmd_pairdist(args) -> int:
    (BI, I), (BJ, J) = _bar_ref(args.first), _bar_ref(args.second)
    if BI.kind != BJ.kind or BI.dim != BJ.dim:
        raise UsageError("intervals of different kind or dimension")
    value, attained = pair_distance(I, J)
    print(f"pair_distance = {ext_str(value)} ({'attained' if attained else 'not attained'})")
    return OK


def cmd_bottleneck(args) -> int:
    M, N = load_barcode(args.M), load_barcode(args.N)
    if M.kind != N.kind or M.dim != N.dim:
        raise UsageError("barcodes of different kind or dimension")
    value, attained, found = bottleneck(M, N)
    print(f"d_B = {ext_str(value)} ({'attained' if attained else 'not attained'})")
    print(f"matching: {_fmt_matching(found)}")
    if found is not None:
        for side, ident, t in found.unmatched:
            print(f"unmatched {side}:{ident} threshold {t}")
    if args.oracle:
        expected = oracle_bottleneck(M, N)
        print(f"oracle: {ext_str(expected)}")
        if expected != value:
            return FALSIFIED
    return OK


def cmd_verify(args) -> int:
    M, N = load_barcode(args.M), load_barcode(args.N)
    W = load_witness(args.W, M, N)
    verdict = verify_witness(M, N, W)
    print(f"delta = {W.delta}: {'valid' if verdict.valid else 'invalid'}")
    for v in verdict.violations:
        print(f"  {v}")
    status = OK if verdict.valid else FALSIFIED
    if args.oracle:
        grid = build_grid(M.intervals() + N.intervals(), [W.delta, 2 * W.delta])
        other = oracle_verify_witness(M, N, W, grid)
        agree = other.valid == verdict.valid and sorted(other.pairs()) == sorted(verdict.pairs())
        print(f"oracle: {'valid' if other.valid else 'invalid'} ({'agrees' if agree else 'DISAGREES'})")
        if not agree:
            status = FALSIFIED
    return status


def cmd_certify(args) -> int:
    M, N = load_barcode(args.M), load_barcode(args.N)
    try:
        cert = RankCertificate(args.eps, args.a, args.b, args.direction)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if check_not_interleaved(M, N, cert):
        print(f"certified: not {cert.eps}-interleaved")
        return OK
    print("no certificate at these points")
    return FALSIFIED


def cmd_replay(args) -> int:
    M, N = load_barcode(args.M), load_barcode(args.N)
    W = load_witness(args.W, M, N)
    subset = args.subset.split(",") if args.subset else M.ids()
    try:
        result = lemma_matrix_replay(M, N, W, subset, args.factor)
    except (ValueError, InvalidWitness) as exc:
        print(f"precondition failed: {exc}")
        return FALSIFIED
    print(result.format())
    return OK if result.passed else FALSIFIED


def cmd_examples(args) -> int:
    ins = INSTANCES[args.name]()
    verdict = verify_witness(ins.M, ins.N, ins.witness)
    value, attained, _ = bottleneck(ins.M, ins.N)
    checks = [
        (f"witness valid at delta = {ins.witness.delta}", verdict.valid),
        (f"d_B = {ext_str(value)} ({'attained' if attained else 'not attained'})", value == ins.d_B and attained),
    ]
    if ins.certificate is not None:
        checks.append(
            (f"not {ins.certificate.eps}-interleaved (rank certificate)",
             check_not_interleaved(ins.M, ins.N, ins.certificate))
        )
    if args.name == "threebythree":
        replay = lemma_matrix_replay(ins.M, ins.N, ins.witness, ins.M.ids(), 3)
        checks.append(("counting-lemma replay, factor 3", replay.passed))
    for note in ins.notes.values():
        print(f"note: {note}")
    for text, ok in checks:
        print(f"[{'ok' if ok else 'FAIL'}] {text}")
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        for tag, text in (("M", emit_barcode(ins.M)), ("N", emit_barcode(ins.N)), ("W", emit_witness(ins.witness))):
            with open(os.path.join(args.out, f"{args.name}_{tag}.json"), "w", encoding="utf-8") as fh:
                fh.write(text)
    return OK if all(ok for _, ok in checks) else FALSIFIED


def cmd_fuzz(args) -> int:
    if args.kind == "triangle" and args.dim != 2:
        raise UsageError("triangles need --dim 2")
    failures = run_suite(args.kind, args.dim, args.count, args.seed)
    bad = 0
    for name, errs in failures.items():
        print(f"{name}: {'ok' if not errs else f'{len(errs)} failures'}")
        for e in errs[:5]:
            print(f"  {e}")
        bad += len(errs)
    return OK if bad == 0 else FALSIFIED


def cmd_render(args) -> int:
    B = load_barcode(args.M)
    if B.dim != 2:
        raise UsageError("render needs a 2-D barcode")
    svg = render_svg(B)
    if args.svg == "-":
        sys.stdout.write(svg)
    else:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="multistab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("pairdist", help="interleaving distance of two single intervals")
    s.add_argument("first", help="FILE:ID")
    s.add_argument("second", help="FILE:ID")
    s.set_defaults(run=cmd_pairdist)

    s = sub.add_parser("bottleneck", help="exact bottleneck distance with a matching")
    s.add_argument("M")
    s.add_argument("N")
    s.add_argument("--oracle", action="store_true", help="cross-check by exhaustive search")
    s.set_defaults(run=cmd_bottleneck)

    s = sub.add_parser("verify", help="check an interleaving witness")
    s.add_argument("M")
    s.add_argument("N")
    s.add_argument("W")
    s.add_argument("--oracle", action="store_true", help="cross-check on a sample grid")
    s.set_defaults(run=cmd_verify)

    s = sub.add_parser("certify", help="rank certificate that M and N are not eps-interleaved")
    s.add_argument("M")
    s.add_argument("N")
    s.add_argument("--eps", type=_rational, required=True)
    s.add_argument("--a", type=_point, required=True, help="comma-separated point")
    s.add_argument("--b", type=_point, required=True, help="comma-separated point")
    s.add_argument("--direction", choices=["N", "M"], default="N")
    s.set_defaults(run=cmd_certify)

    s = sub.add_parser("replay-lemma", help="triangular-matrix replay of the counting argument")
    s.add_argument("M")
    s.add_argument("N")
    s.add_argument("W")
    s.add_argument("--subset", default="", help="comma-separated ids (default: all of M)")
    s.add_argument("--factor", type=_rational, required=True)
    s.set_defaults(run=cmd_replay)

    s = sub.add_parser("examples", help="rebuild and check a worked example")
    s.add_argument("name", choices=sorted(INSTANCES))
    s.add_argument("--out", help="directory for the barcode and witness documents")
    s.set_defaults(run=cmd_examples)

    s = sub.add_parser("fuzz", help="seeded randomized property checks")
    s.add_argument("--kind", choices=KINDS, default="rectangle")
    s.add_argument("--dim", type=int, default=2)
    s.add_argument("--count", type=int, default=50)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(run=cmd_fuzz)

    s = sub.add_parser("render", help="draw a 2-D barcode as SVG")
    s.add_argument("M")
    s.add_argument("--svg", required=True, help="output file, or - for stdout")
    s.set_defaults(run=cmd_render)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.run(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return PARSE
    except (InstanceTooLarge, InadequateGrid) as exc:
        print(f"size limit: {exc}", file=sys.stderr)
        return TOO_LARGE
    except (UsageError, TypeError) as exc:
        print(f"usage: {exc}", file=sys.stderr)
        return USAGE
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
