"""Matrix text I/O and deterministic report serialization."""

from __future__ import annotations

import csv
import io
import json
import re
from pathlib import Path

from .gf import FieldSpec
from .matfq import MatFq, MatrixError
from .starlab import CSV_COLUMNS, Census, StarReport


def parse_matrix(text: str, field: FieldSpec) -> MatFq:
    """Parse rows separated by ';' or newlines, entries by whitespace.

    >>> from grassclique.gf import get_field
    >>> parse_matrix("1 0; 0 1", get_field(2)).entries
    ((1, 0), (0, 1))
    """
    rows = []
    for chunk in re.split(r"[;\n]", text):
        toks = chunk.split()
        if not toks:
            continue
        try:
            rows.append([int(t) for t in toks])
        except ValueError as exc:
            raise MatrixError(f"non-integer entry in row {chunk.strip()!r}") from exc
    if not rows:
        raise MatrixError("empty matrix")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise MatrixError("ragged matrix rows")
    for r in rows:
        for x in r:
            if not 0 <= x < field.q:
                raise MatrixError(f"entry {x} is not an element code of GF({field.q})")
    return MatFq.from_rows(field, rows)


def format_matrix(m: MatFq) -> str:
    return "; ".join(" ".join(str(x) for x in row) for row in m.entries)


_FLAT_LIST = re.compile(r"\[\s*([-\d.,\s]*?)\s*\]")


def _dumps(obj: object) -> bytes:
    text = json.dumps(obj, indent=2, sort_keys=True)
    # keep vectors of numbers on one line
    text = _FLAT_LIST.sub(lambda m: "[" + ", ".join(m.group(1).replace(",", " ").split()) + "]", text)
    return (text + "\n").encode()


def census_payload(c: Census) -> dict:
    # wall time stays out so that files from different runs compare equal
    return {"summary": c.summary(), "rows": [r.to_dict() for r in c.rows]}


def emit_report(report: StarReport | Census, fmt: str = "json") -> bytes:
    if fmt not in ("json", "csv"):
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(report, StarReport):
        if fmt != "json":
            raise ValueError("star reports are JSON only")
        return _dumps(report.to_dict())
    if fmt == "json":
        return _dumps(census_payload(report))
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for row in report.rows:
        d = row.to_dict()
        d["s"] = ";".join(" ".join(map(str, r)) for r in d["s"])
        d["class_sizes"] = " ".join(map(str, d["class_sizes"]))
        w.writerow(["" if d[col] is None else d[col] for col in CSV_COLUMNS])
    return buf.getvalue().encode()


def write_bytes(path: str | Path, data: bytes) -> None:
    path = Path(path)
    try:
        path.write_bytes(data)
    except OSError as exc:
        raise OSError(f"cannot write report to {path}: {exc.strerror}") from exc
