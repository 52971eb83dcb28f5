"""
molr/records.py
Purpose: Plain-text record files for MOLR sets and incidence listings.
         One record is a header line followed by t·k body lines:

             MOLR n=4 k=2 t=2 aut=8 flags=HTsHsT
             0 1 2 3
             3 2 1 0
             0 1 2 3
             2 3 0 1

         aut and flags are optional. Records are separated by blank lines
         and '#' starts a comment anywhere on a line.
Created: 2026-10-19
Last Updated: 2026-10-19
"""

import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Optional, Tuple

from .core import MolrSet, validate_molr
from .errors import MolrError, RecordParseError
from .geometry import IncidenceStructure
from .symmetry import ClassRecord, RegularityFlags

HEADER_WORD = "MOLR"
FLAG_TOKEN = re.compile(r"sH|sT|H|T")


@dataclass(frozen=True)
class MolrRecord:
    molr: MolrSet
    aut: Optional[int] = None
    flags: Optional[RegularityFlags] = None


def format_flags(flags: RegularityFlags) -> str:
    return flags.code()


def parse_flags(text: str) -> RegularityFlags:
    if text == "-":
        return RegularityFlags()
    tokens = FLAG_TOKEN.findall(text)
    if "".join(tokens) != text or len(set(tokens)) != len(tokens):
        raise ValueError(f"bad flags {text!r}")
    return RegularityFlags(
        homogeneous="H" in tokens,
        transitive="T" in tokens,
        stepwise_homogeneous="sH" in tokens,
        stepwise_transitive="sT" in tokens,
    )


def record_from_class(rec: ClassRecord) -> MolrRecord:
    return MolrRecord(rec.representative, rec.aut_order, rec.flags)


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def format_record(record: MolrRecord) -> str:
    m = record.molr
    header = f"{HEADER_WORD} n={m.n} k={m.k} t={m.t}"
    if record.aut is not None:
        header += f" aut={record.aut}"
    if record.flags is not None:
        header += f" flags={format_flags(record.flags)}"
    lines = [header]
    for rect in m.rects:
        for row in rect.cells:
            lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def serialize_records(records: Iterable[MolrRecord]) -> str:
    return "\n".join(format_record(r) for r in records)


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------


def _parse_header(fields: List[str], line_number: int, source: str) -> Tuple[int, int, int, Optional[int], Optional[RegularityFlags]]:
    values = {}
    for token in fields:
        key, sep, value = token.partition("=")
        if not sep or key not in ("n", "k", "t", "aut", "flags") or key in values:
            raise RecordParseError(line_number, f"unexpected header field {token!r}", source)
        values[key] = value
    missing = [key for key in ("n", "k", "t") if key not in values]
    if missing:
        raise RecordParseError(line_number, f"header lacks {', '.join(missing)}", source)
    try:
        n, k, t = int(values["n"]), int(values["k"]), int(values["t"])
        aut = int(values["aut"]) if "aut" in values else None
        flags = parse_flags(values["flags"]) if "flags" in values else None
    except ValueError as e:
        raise RecordParseError(line_number, f"bad header value: {e}", source)
    if n < 1 or k < 1 or t < 1:
        raise RecordParseError(line_number, "n, k and t must be positive", source)
    return n, k, t, aut, flags


def parse_records(text: str, source: str = "<input>") -> List[MolrRecord]:
    """
    Parse every record in text.

    Raises RecordParseError with the 1-based line number of the first
    offending line; body content that is not a valid MOLR set is reported
    at the header line of its record.
    """
    records: List[MolrRecord] = []
    pending = None  # (header line number, n, k, t, aut, flags, rows)

    def close(at_line: int) -> None:
        nonlocal pending
        if pending is None:
            return
        start, n, k, t, aut, flags, rows = pending
        if len(rows) != t * k:
            raise RecordParseError(at_line, f"record at line {start} has {len(rows)} rows, expected {t * k}", source)
        grids = [rows[q * k:(q + 1) * k] for q in range(t)]
        try:
            molr = validate_molr(grids)
        except MolrError as e:
            raise RecordParseError(start, str(e), source)
        if molr.n != n:
            raise RecordParseError(start, f"rows have {molr.n} symbols, header says n={n}", source)
        records.append(MolrRecord(molr, aut, flags))
        pending = None

    lines = text.splitlines()
    for number, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == HEADER_WORD:
            close(number)
            n, k, t, aut, flags = _parse_header(fields[1:], number, source)
            pending = (number, n, k, t, aut, flags, [])
            continue
        if pending is None:
            raise RecordParseError(number, "body line before any MOLR header", source)
        try:
            row = [int(v) for v in fields]
        except ValueError:
            raise RecordParseError(number, f"non-integer symbol in {line!r}", source)
        n, k, t, rows = pending[1], pending[2], pending[3], pending[6]
        if len(row) != n:
            raise RecordParseError(number, f"row has {len(row)} symbols, expected {n}", source)
        if len(rows) == t * k:
            raise RecordParseError(number, "too many rows for this record", source)
        rows.append(row)
    close(len(lines) + 1)
    return records


def read_records(path: str) -> List[MolrRecord]:
    """Read a record file; '-' reads standard input."""
    if path == "-":
        return parse_records(sys.stdin.read(), "<stdin>")
    return parse_records(Path(path).read_text(), path)


def write_records(path: str, records: Iterable[MolrRecord]) -> None:
    """Write a record file; '-' writes standard output."""
    text = serialize_records(records)
    if path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text)


# ---------------------------------------------------------------------------
# Incidence listings
# ---------------------------------------------------------------------------


def format_tag(tag: tuple) -> str:
    return ":".join(str(part) for part in tag)


def format_incidence(s: IncidenceStructure) -> str:
    """One line per geometry line: its tag, then its sorted point indices."""
    out = []
    for tag, line in zip(s.tags, s.lines):
        out.append(" ".join([format_tag(tag)] + [str(p) for p in sorted(line)]))
    return "\n".join(out) + "\n"
