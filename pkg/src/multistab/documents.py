"""JSON documents for barcodes and interleaving witnesses.

Barcode document::

    {"kind": "rectangle", "dim": 2,
     "intervals": [{"id": "I1", "min": ["-3", "-1"], "max": ["1", "3"],
                    "min_flags": ["open", "open"], "max_flags": ["open", "open"]}]}

Free intervals carry only ``min``; triangles carry only ``max: [a, b]``.
Numbers are strings ``"p/q"``, ``"inf"`` or ``"-inf"`` (plain JSON integers
are accepted on input).  Boundary flags map to decorations as
min open -> plus, min closed -> minus, max open -> minus, max closed -> plus.

Witness document::

    {"delta": "1", "f": [{"from": "I1", "to": "J", "weight": "1"}], "g": [...]}

:func:`emit_barcode` and :func:`emit_witness` write a canonical form, so
``emit(parse(text)) == text`` for any canonical input.
"""

from __future__ import annotations

import json
import re
from importlib import resources
from typing import Any, List, Optional

from .decorated import INF, MINUS, NEG_INF, PLUS, DecoratedPoint, DecoratedValue, ext_str, to_ext
from .interleave import WeightMatrix
from .intervals import KINDS, Barcode, FreeInterval, Rectangle, Triangle

__all__ = [
    "ParseError",
    "parse_barcode",
    "emit_barcode",
    "parse_witness",
    "emit_witness",
    "load_barcode",
    "load_witness",
    "bundled_path",
]

_MIN_FLAG = {"open": PLUS, "closed": MINUS}
_MAX_FLAG = {"open": MINUS, "closed": PLUS}


class ParseError(ValueError):
    """Malformed document; ``line`` and ``field`` locate the problem when known."""

    def __init__(self, message: str, line: Optional[int] = None, field: Optional[str] = None):
        self.message, self.line, self.field = message, line, field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(field)
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


def _line_of(text: str, ident: Any) -> Optional[int]:
    """Line of the record with this id, found textually (json drops positions)."""
    if ident is None:
        return None
    m = re.search(r'"id"\s*:\s*' + re.escape(json.dumps(ident)), text)
    return text.count("\n", 0, m.start()) + 1 if m else None


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, None) from None


def _number(raw, field: str, line, finite: bool = False):
    if isinstance(raw, float) or isinstance(raw, bool) or not isinstance(raw, (int, str)):
        raise ParseError(f"expected an integer or a 'p/q' string, got {raw!r}", line, field)
    try:
        x = to_ext(raw)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not an exact rational: {raw!r}", line, field) from None
    if finite and x in (INF, NEG_INF):
        raise ParseError("value must be finite", line, field)
    return x


def _vector(rec, key: str, n: int, where: str, line):
    raw = rec.get(key)
    if not isinstance(raw, list) or len(raw) != n:
        raise ParseError(f"expected a list of {n} entries", line, f"{where}.{key}")
    return raw


def _rectangle(rec, n: int, where: str, line) -> Rectangle:
    corners = []
    for key, flags in (("min", _MIN_FLAG), ("max", _MAX_FLAG)):
        values = _vector(rec, key, n, where, line)
        marks = _vector(rec, f"{key}_flags", n, where, line)
        pt = []
        for i, (v, mark) in enumerate(zip(values, marks)):
            x = _number(v, f"{where}.{key}[{i}]", line)
            if mark not in flags:
                raise ParseError(f"flag must be 'open' or 'closed', got {mark!r}", line, f"{where}.{key}_flags[{i}]")
            try:
                pt.append(DecoratedValue(x, flags[mark]))
            except ValueError as exc:
                raise ParseError(str(exc), line, f"{where}.{key}_flags[{i}]") from None
        corners.append(DecoratedPoint(tuple(pt)))
    try:
        return Rectangle(*corners)
    except ValueError as exc:
        raise ParseError(str(exc), line, where) from None


def parse_barcode(text: str) -> Barcode:
    doc = _load_json(text)
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object", 1)
    kind = doc.get("kind")
    if kind not in KINDS:
        raise ParseError(f"kind must be one of {', '.join(KINDS)}", None, "kind")
    dim = doc.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ParseError("dim must be a positive integer", None, "dim")
    if kind == "triangle" and dim != 2:
        raise ParseError("triangles need dim 2", None, "dim")
    records = doc.get("intervals")
    if not isinstance(records, list):
        raise ParseError("intervals must be a list", None, "intervals")

    items, seen = [], set()
    for k, rec in enumerate(records):
        where = f"intervals[{k}]"
        if not isinstance(rec, dict):
            raise ParseError("interval record must be an object", None, where)
        ident = rec.get("id")
        line = _line_of(text, ident)
        if not isinstance(ident, str) or not ident:
            raise ParseError("id must be a nonempty string", line, f"{where}.id")
        if ident in seen:
            raise ParseError(f"duplicate id {ident!r}", line, f"{where}.id")
        seen.add(ident)
        if kind == "rectangle":
            I = _rectangle(rec, dim, where, line)
        elif kind == "free":
            raw = _vector(rec, "min", dim, where, line)
            I = FreeInterval(tuple(_number(v, f"{where}.min[{i}]", line, finite=True) for i, v in enumerate(raw)))
        else:
            a, b = (_number(v, f"{where}.max[{i}]", line) for i, v in enumerate(_vector(rec, "max", 2, where, line)))
            try:
                I = Triangle(a, b)
            except ValueError as exc:
                raise ParseError(str(exc), line, f"{where}.max") from None
        items.append((ident, I))
    return Barcode(kind, dim, items)


def _flag(c: DecoratedValue, low: bool) -> str:
    table = _MIN_FLAG if low else _MAX_FLAG
    return next(name for name, dec in table.items() if dec == c.decoration)


def _record(ident: str, I) -> dict:
    if isinstance(I, Rectangle):
        return {
            "id": ident,
            "min": [ext_str(c.value) for c in I.min],
            "max": [ext_str(c.value) for c in I.max],
            "min_flags": [_flag(c, True) for c in I.min],
            "max_flags": [_flag(c, False) for c in I.max],
        }
    if isinstance(I, FreeInterval):
        return {"id": ident, "min": [ext_str(x) for x in I.min]}
    return {"id": ident, "max": [ext_str(I.a), ext_str(I.b)]}


def _dump_list(key: str, records: List[dict]) -> str:
    if not records:
        return f'  "{key}": []'
    body = ",\n".join("    " + json.dumps(r, ensure_ascii=False) for r in records)
    return f'  "{key}": [\n{body}\n  ]'


def emit_barcode(B: Barcode) -> str:
    """Canonical text: header fields, then one interval record per line."""
    head = f'{{\n  "kind": {json.dumps(B.kind)},\n  "dim": {B.dim},\n'
    return head + _dump_list("intervals", [_record(i, I) for i, I in B]) + "\n}\n"


def parse_witness(text: str, M: Optional[Barcode] = None, N: Optional[Barcode] = None) -> WeightMatrix:
    """Parse a witness; when barcodes are given every id must resolve."""
    doc = _load_json(text)
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object", 1)
    delta = _number(doc.get("delta"), "delta", None, finite=True)
    if delta < 0:
        raise ParseError("delta must be nonnegative", None, "delta")
    tables = {}
    for side, src, dst in (("f", M, N), ("g", N, M)):
        entries = doc.get(side, [])
        if not isinstance(entries, list):
            raise ParseError("expected a list of entries", None, side)
        table = {}
        for k, e in enumerate(entries):
            where = f"{side}[{k}]"
            if not isinstance(e, dict) or set(e) != {"from", "to", "weight"}:
                raise ParseError("entry needs exactly 'from', 'to' and 'weight'", None, where)
            a, b = e["from"], e["to"]
            if src is not None and a not in src:
                raise ParseError(f"unknown id {a!r}", None, f"{where}.from")
            if dst is not None and b not in dst:
                raise ParseError(f"unknown id {b!r}", None, f"{where}.to")
            w = _number(e["weight"], f"{where}.weight", None, finite=True)
            if w == 0:
                raise ParseError("weights must be nonzero", None, f"{where}.weight")
            if (a, b) in table:
                raise ParseError(f"repeated entry ({a}, {b})", None, where)
            table[(a, b)] = w
        tables[side] = table
    return WeightMatrix(delta, tables["f"], tables["g"])


def emit_witness(W: WeightMatrix) -> str:
    def rows(table):
        return [{"from": a, "to": b, "weight": str(w)} for (a, b), w in table.items()]

    head = f'{{\n  "delta": {json.dumps(str(W.delta))},\n'
    return head + _dump_list("f", rows(W.f)) + ",\n" + _dump_list("g", rows(W.g)) + "\n}\n"


def load_barcode(path) -> Barcode:
    with open(path, encoding="utf-8") as fh:
        return parse_barcode(fh.read())


def load_witness(path, M: Optional[Barcode] = None, N: Optional[Barcode] = None) -> WeightMatrix:
    with open(path, encoding="utf-8") as fh:
        return parse_witness(fh.read(), M, N)


def bundled_path(name: str):
    """Path of a bundled data file such as ``"square_M.json"``."""
    return resources.files("multistab") / "data" / name


def bundled_names() -> List[str]:
    return sorted(p.name for p in (resources.files("multistab") / "data").iterdir() if p.name.endswith(".json"))
