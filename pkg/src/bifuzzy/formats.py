"""Carrier files, alternatives tables and canonical serialization.

Carrier files are JSON::

    {
      "n": 2,
      "entries": [
        {"pos": [1], "neg": [2], "value": 0.2},
        ...
      ]
    }

Capacity entries omit ``neg``.  The boundary entries (the empty pair and
the two extreme pairs) may be omitted and take their forced values.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .core import (
    BiCapacity,
    Capacity,
    Interval,
    SignedCoalition,
    full,
    members,
    validate_bicapacity,
    validate_capacity,
)
from .errors import DuplicateId, ParseError, RaggedRow, ScaleViolation


def _reject_constant(name):
    raise ParseError(f"{name} is not a valid carrier value")


def _parse_json(text: str, source: str):
    try:
        return json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as e:
        raise ParseError(f"{source}: line {e.lineno}, column {e.colno}: {e.msg}") from None


def _indices(entry: dict, key: str, n: int, where: str) -> int:
    raw = entry.get(key, [])
    if not isinstance(raw, list) or not all(isinstance(i, int) and not isinstance(i, bool) for i in raw):
        raise ParseError(f"{where}: '{key}' must be a list of integers")
    if any(not 1 <= i <= n for i in raw):
        raise ParseError(f"{where}: '{key}' has an index outside 1..{n}")
    if any(a >= b for a, b in zip(raw, raw[1:])):
        raise ParseError(f"{where}: '{key}' must be sorted without repeats")
    mask = 0
    for i in raw:
        mask |= 1 << (i - 1)
    return mask


def _value(entry: dict, where: str) -> float:
    v = entry.get("value")
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ParseError(f"{where}: 'value' must be a number")
    return float(v)


def _header(doc, source: str) -> tuple[int, list]:
    if not isinstance(doc, dict):
        raise ParseError(f"{source}: top level must be an object with 'n' and 'entries'")
    n = doc.get("n")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ParseError(f"{source}: 'n' must be a positive integer")
    entries = doc.get("entries", [])
    if not isinstance(entries, list) or not all(isinstance(e, dict) for e in entries):
        raise ParseError(f"{source}: 'entries' must be a list of objects")
    return n, entries


def parse_capacity(text: str, source: str = "<carrier>") -> Capacity:
    n, entries = _header(_parse_json(text, source), source)
    parsed = []
    for k, entry in enumerate(entries, 1):
        where = f"{source}: entry {k}"
        if "neg" in entry:
            raise ParseError(f"{where}: capacity entries take no 'neg' (is this a bi-capacity file?)")
        parsed.append((_indices(entry, "pos", n, where), _value(entry, where)))
    given = {mask for mask, _ in parsed}
    for mask, default in ((0, 0.0), (full(n), 1.0)):
        if mask not in given:
            parsed.append((mask, default))
    return validate_capacity(n, parsed)


def parse_bicapacity(text: str, source: str = "<carrier>") -> BiCapacity:
    n, entries = _header(_parse_json(text, source), source)
    with_neg = sum("neg" in e for e in entries)
    if 0 < with_neg < len(entries):
        raise ParseError(f"{source}: some entries have 'neg' and some do not")
    if entries and with_neg == 0:
        raise ParseError(f"{source}: bi-capacity entries need 'neg' (is this a capacity file?)")
    parsed = []
    for k, entry in enumerate(entries, 1):
        where = f"{source}: entry {k}"
        pos = _indices(entry, "pos", n, where)
        neg = _indices(entry, "neg", n, where)
        parsed.append((SignedCoalition(pos, neg), _value(entry, where)))
    given = {p for p, _ in parsed}
    top = full(n)
    for key, default in (((0, 0), 0.0), ((top, 0), 1.0), ((0, top), -1.0)):
        if key not in given:
            parsed.append((SignedCoalition(*key), default))
    return validate_bicapacity(n, parsed)


def load_capacity(path) -> Capacity:
    return parse_capacity(_read(path), str(path))


def load_bicapacity(path) -> BiCapacity:
    return parse_bicapacity(_read(path), str(path))


def _read(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None


def format_number(v: float) -> str:
    """Shortest decimal that round-trips to the same float."""
    v = float(v) + 0.0  # folds -0.0 into 0.0
    if not math.isfinite(v):
        raise ValueError(f"cannot serialize {v!r}")
    return repr(v)


def _entry_line(pos: int, neg: int | None, value: float) -> str:
    parts = [f'"pos": {json.dumps(members(pos))}']
    if neg is not None:
        parts.append(f'"neg": {json.dumps(members(neg))}')
    parts.append(f'"value": {format_number(value)}')
    return "    {" + ", ".join(parts) + "}"


def _document(n: int, lines: list[str]) -> str:
    if not lines:
        return f'{{\n  "n": {n},\n  "entries": []\n}}\n'
    return f'{{\n  "n": {n},\n  "entries": [\n' + ",\n".join(lines) + "\n  ]\n}\n"


def dumps_capacity(mu: Capacity) -> str:
    """Canonical text: defaults omitted, entries by (size, mask)."""
    top = full(mu.n)
    masks = sorted((m for m in range(1 << mu.n) if m not in (0, top)),
                   key=lambda m: (bin(m).count("1"), m))
    return _document(mu.n, [_entry_line(m, None, mu[m]) for m in masks])


def dumps_bicapacity(mb: BiCapacity) -> str:
    """Canonical text: defaults omitted, entries by (|A|+|B|, A mask, B mask)."""
    top = full(mb.n)
    skip = {(0, 0), (top, 0), (0, top)}
    keys = sorted((k for k in mb.table if k not in skip),
                  key=lambda k: (bin(k[0]).count("1") + bin(k[1]).count("1"), k[0], k[1]))
    return _document(mb.n, [_entry_line(pos, neg, mb[pos, neg]) for pos, neg in keys])


def dumps_carrier(carrier) -> str:
    return dumps_bicapacity(carrier) if isinstance(carrier, BiCapacity) else dumps_capacity(carrier)


def save_carrier(carrier, path) -> None:
    Path(path).write_text(dumps_carrier(carrier), encoding="utf-8")


def fingerprint(carrier) -> str:
    """SHA-256 of the canonical serialization."""
    return hashlib.sha256(dumps_carrier(carrier).encode("utf-8")).hexdigest()


# -- alternatives ---------------------------------------------------------------


@dataclass(frozen=True)
class AlternativesTable:
    ids: tuple[str, ...]
    rows: tuple[tuple[float, ...], ...]
    n: int

    def __len__(self):
        return len(self.ids)

    def check_scale(self, scale: Interval) -> None:
        for ident, row in zip(self.ids, self.rows):
            for i, v in enumerate(row, 1):
                if v not in scale:
                    raise ScaleViolation(f"alternative {ident!r}: c{i}={v!r} outside {scale}")


def parse_alternatives(text: str, source: str = "<alternatives>") -> AlternativesTable:
    """Comma-separated table with header ``id,c1,...,cn``; empty input is an empty table."""
    reader = csv.reader(io.StringIO(text))
    header = None
    ids: list[str] = []
    rows: list[tuple[float, ...]] = []
    seen: set[str] = set()
    for line_no, record in enumerate(reader, 1):
        if not record or all(not cell.strip() for cell in record):
            continue
        record = [cell.strip() for cell in record]
        if header is None:
            if record[0].lower() != "id" or len(record) < 2:
                raise ParseError(f"{source}: line {line_no}: header must be id,c1,...,cn")
            header = record
            continue
        if len(record) != len(header):
            raise RaggedRow(
                f"{source}: line {line_no}: expected {len(header)} fields, got {len(record)}")
        ident = record[0]
        if ident in seen:
            raise DuplicateId(f"{source}: line {line_no}: duplicate id {ident!r}")
        seen.add(ident)
        values = []
        for col, cell in enumerate(record[1:], 2):
            try:
                v = float(cell)
            except ValueError:
                raise ParseError(f"{source}: line {line_no}, field {col}: {cell!r} is not a number") from None
            if not math.isfinite(v):
                raise ParseError(f"{source}: line {line_no}, field {col}: {cell!r} is not finite")
            values.append(v)
        ids.append(ident)
        rows.append(tuple(values))
    n = len(header) - 1 if header else 0
    return AlternativesTable(tuple(ids), tuple(rows), n)


def load_alternatives(path) -> AlternativesTable:
    return parse_alternatives(_read(path), str(path))


def render_value(v: float) -> str:
    """Twelve significant digits."""
    return format(float(v) + 0.0, ".12g")


def write_rows(rows: Sequence[Sequence], header: Sequence[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()
