"""Serialization of triangles, sign matrices and verification reports.

JSON is the roundtrip format for all three kinds; CSV covers matrices and
report detail tables; text is a human-readable display format.  Integers
are written in decimal at full precision.
"""

from __future__ import annotations

import csv
import io
import json

from .core import SignMatrix, TriangularArray
from .errors import InvalidInputError, ParseError
from .report import VerificationReport

KINDS = ("triangle", "matrix", "report")
FORMATS = ("json", "csv", "text")


def _report_payload(r: VerificationReport) -> dict:
    payload = {
        "type": "report",
        "identity_id": r.identity_id,
        "parameters": dict(r.parameters),
        "status": r.status,
        "details": [[d, e, a] for d, e, a in r.details],
        "elapsed_ms": r.elapsed_ms,
    }
    if r.reason is not None:
        payload["reason"] = r.reason
    return payload


def _triangle_text(t: TriangularArray) -> str:
    width = max(len(str(x)) for row in t.rows for x in row)
    lines = []
    for i, row in enumerate(t.rows):
        pad = " " * ((t.n - 1 - i) * (width + 1) // 2)
        lines.append(pad + " ".join(str(x).rjust(width) for x in row))
    return "\n".join(lines) + "\n"


def _matrix_text(m: SignMatrix) -> str:
    if m.cols == 0:
        return "\n" * m.rows
    width = max(len(str(x)) for row in m.entries for x in row)
    return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in m.entries) + "\n"


def _report_text(r: VerificationReport) -> str:
    lines = [f"identity: {r.identity_id}"]
    if r.parameters:
        params = " ".join(f"{k}={v}" for k, v in sorted(r.parameters.items()))
        lines.append(f"parameters: {params}")
    lines.append(f"status: {r.status}")
    if r.reason:
        lines.append(f"reason: {r.reason}")
    for desc, expected, actual in r.details:
        mark = "ok" if expected == actual else "MISMATCH"
        lines.append(f"  [{mark}] {desc}: expected {expected}, got {actual}")
    lines.append(f"elapsed_ms: {r.elapsed_ms:.1f}")
    return "\n".join(lines) + "\n"


def _csv_bytes(rows) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue().encode()


def serialize(value, format: str = "json") -> bytes:
    if format not in FORMATS:
        raise InvalidInputError(f"unknown format {format!r}")
    if isinstance(value, TriangularArray):
        if format == "json":
            return json.dumps({"type": "triangle", "rows": [list(r) for r in value.rows]}).encode()
        if format == "text":
            return _triangle_text(value).encode()
        raise InvalidInputError("csv is only defined for matrices and report tables")
    if isinstance(value, SignMatrix):
        if format == "json":
            return json.dumps({"type": "matrix", "entries": [list(r) for r in value.entries]}).encode()
        if format == "text":
            return _matrix_text(value).encode()
        return _csv_bytes(value.entries)
    if isinstance(value, VerificationReport):
        if format == "json":
            return json.dumps(_report_payload(value)).encode()
        if format == "text":
            return _report_text(value).encode()
        return _csv_bytes([(d, str(e), str(a)) for d, e, a in value.details])
    raise InvalidInputError(f"cannot serialize {type(value).__name__}")


def _as_int(x, where):
    if isinstance(x, int) and not isinstance(x, bool):
        return x
    raise ParseError(f"expected an integer at {where}, got {x!r}")


def _parse_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from None


def _triangle_from_obj(obj):
    rows = obj.get("rows")
    if not isinstance(rows, list):
        raise ParseError("missing 'rows' list")
    parsed = []
    for i, row in enumerate(rows):
        if not isinstance(row, list):
            raise ParseError(f"rows[{i}] is not a list")
        parsed.append(tuple(_as_int(x, f"rows[{i}][{j}]") for j, x in enumerate(row)))
    try:
        return TriangularArray(tuple(parsed))
    except InvalidInputError as e:
        raise ParseError(str(e)) from None


def _matrix_from_obj(obj):
    entries = obj.get("entries")
    if not isinstance(entries, list):
        raise ParseError("missing 'entries' list")
    parsed = []
    for i, row in enumerate(entries):
        if not isinstance(row, list):
            raise ParseError(f"entries[{i}] is not a list")
        parsed.append(tuple(_as_int(x, f"entries[{i}][{j}]") for j, x in enumerate(row)))
    try:
        return SignMatrix(tuple(parsed))
    except InvalidInputError as e:
        raise ParseError(str(e)) from None


def _report_from_obj(obj):
    try:
        details = tuple(
            (str(d[0]), _as_int(d[1], "details"), _as_int(d[2], "details"))
            for d in obj["details"]
        )
        return VerificationReport(
            identity_id=str(obj["identity_id"]),
            parameters=dict(obj["parameters"]),
            status=str(obj["status"]),
            details=details,
            elapsed_ms=float(obj["elapsed_ms"]),
            reason=obj.get("reason"),
        )
    except (KeyError, IndexError, TypeError) as e:
        raise ParseError(f"malformed report object: {e}") from None


def _matrix_from_csv(text: str):
    rows = []
    for i, line in enumerate(csv.reader(io.StringIO(text))):
        if not line:
            continue
        row = []
        for j, cell in enumerate(line):
            try:
                row.append(int(cell))
            except ValueError:
                raise ParseError(f"row {i + 1} column {j + 1}: {cell!r} is not an integer") from None
        rows.append(tuple(row))
    if not rows:
        raise ParseError("empty csv matrix")
    try:
        return SignMatrix(tuple(rows))
    except InvalidInputError as e:
        raise ParseError(str(e)) from None


def deserialize(data, kind: str):
    """Parse bytes or text into the expected kind of value.

    JSON is accepted for every kind; CSV (detected by the absence of a JSON
    object) only for matrices.
    """
    if kind not in KINDS:
        raise InvalidInputError(f"unknown kind {kind!r}")
    text = data.decode() if isinstance(data, (bytes, bytearray)) else str(data)
    stripped = text.strip()
    if not stripped.startswith("{"):
        if kind == "matrix":
            return _matrix_from_csv(text)
        raise ParseError(f"expected a JSON object for kind {kind!r}")
    obj = _parse_json(stripped)
    tag = obj.get("type")
    if tag != kind:
        raise ParseError(f"expected type {kind!r}, found {tag!r}")
    if kind == "triangle":
        return _triangle_from_obj(obj)
    if kind == "matrix":
        return _matrix_from_obj(obj)
    return _report_from_obj(obj)
