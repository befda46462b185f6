"""CSV and JSON forms of a triangle table.

Values are written as decimal strings so that readers without big integers
keep them exact.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any

from .report import SCHEMA_VERSION
from .triangle import JLTable, table_from_rows

CSV_HEADER = ("n", "k", "value")


def table_to_csv(table: JLTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for n, k, v in table.entries():
        w.writerow((n, k, str(v)))
    return buf.getvalue()


def table_from_csv(text: str) -> JLTable:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if tuple(header or ()) != CSV_HEADER:
        raise ValueError(f"expected CSV header {','.join(CSV_HEADER)}")
    rows: list[list[int]] = []
    for n, k, v in reader:
        n, k = int(n), int(k)
        if n == len(rows) + 1 and k == 0:
            rows.append([])
        if n != len(rows) or k != len(rows[-1]):
            raise ValueError(f"entry ({n},{k}) out of order")
        rows[-1].append(int(v))
    return table_from_rows(rows, "csv")


def table_to_document(table: JLTable) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "jl-table",
        "n_max": table.n_max,
        "engine": table.engine,
        "rows": [[str(v) for v in row] for row in table.rows],
    }


def table_to_json(table: JLTable) -> str:
    return json.dumps(table_to_document(table), indent=1)


def table_from_document(doc: dict[str, Any]) -> JLTable:
    if doc.get("kind") != "jl-table":
        raise ValueError("not a table document")
    table = table_from_rows([[int(v) for v in row] for row in doc["rows"]], doc.get("engine", "json"))
    if table.n_max != doc["n_max"]:
        raise ValueError("n_max does not match the number of rows")
    return table


def table_from_json(text: str) -> JLTable:
    return table_from_document(json.loads(text))
