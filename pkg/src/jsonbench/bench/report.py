"""Render a BenchmarkMatrix as CSV, Markdown or JSON.

Output carries no timestamps or host details, so identical matrices render
to identical bytes. Compressed sizes depend on the installed tool versions.
"""

from __future__ import annotations

import csv
import io
import json

from .matrix import FAILED, JSON_BASELINE, SKIPPED, BenchmarkMatrix

FORMATS = ("csv", "markdown", "json")
TABLES = ("raw", "stats", "reductions")
STAT_COLUMNS = ("Average", "Median", "Range", "Std.dev")
REDUCTION_COLUMNS = ("Maximum", "Minimum", "Range", "Median", "Average", "Negative Cases")
GROUPS = ((True, "schema-driven"), (False, "schema-less"))


def _group(info) -> str:
    if info.name == JSON_BASELINE:
        return "baseline"
    return "schema-driven" if info.schema_driven else "schema-less"


def _value(cell) -> str:
    if cell.status == SKIPPED:
        return "skipped"
    if cell.status == FAILED:
        return "failed"
    return str(cell.size)


def raw_rows(matrix: BenchmarkMatrix) -> list:
    header = ["document", "codec", "group"] + [c.title for c in matrix.compressors]
    rows = [header]
    for doc in matrix.documents:
        for info in matrix.codecs:
            rows.append([doc, info.name, _group(info)] + [
                _value(matrix.cell(doc, info.name, comp.name)) for comp in matrix.compressors])
    return rows


def stats_rows(matrix: BenchmarkMatrix) -> list:
    rows = [["document", "compressor", "group", "count", *[c.lower() for c in STAT_COLUMNS]]]
    for doc in matrix.documents:
        for comp in matrix.compressors:
            for driven, label in GROUPS:
                stats = matrix.group_stats(doc, comp.name, driven)
                if stats is None:
                    continue
                rows.append([doc, comp.title, label, str(stats.count), *stats.cells()])
    return rows


def reduction_rows(matrix: BenchmarkMatrix) -> list:
    rows = [["codec", "group", "maximum", "minimum", "range", "median", "average",
             "negative_cases"]]
    for summary in matrix.reduction_summaries():
        group = "schema-driven" if summary.schema_driven else "schema-less"
        rows.append([summary.codec, group, *summary.cells()])
    return rows


def _csv(rows) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue().encode("utf-8")


def _md_table(header, rows) -> str:
    lines = ["| " + " | ".join(header) + " |",
             "|" + "|".join("---" for _ in header) + "|"]
    lines += ["| " + " | ".join(r) + " |" for r in rows]
    return "\n".join(lines) + "\n"


def _markdown(matrix: BenchmarkMatrix) -> bytes:
    out = io.StringIO()
    titles = [c.title for c in matrix.compressors]
    for doc in matrix.documents:
        out.write(f"## {doc}\n\n### Sizes (bytes)\n\n")
        rows = []
        for info in matrix.codecs:
            name = f"**{info.name}**" if info.name == JSON_BASELINE else info.name
            rows.append([name] + [_value(matrix.cell(doc, info.name, c.name))
                                  for c in matrix.compressors])
        out.write(_md_table(["Serialization Format", *titles], rows))

        out.write("\n### Statistics\n\n")
        header = ["Category"] + [f"{label} {col}" for _, label in GROUPS for col in STAT_COLUMNS]
        rows = []
        for comp in matrix.compressors:
            row = [comp.title if comp.level is None else f"{comp.title} (compression level {comp.level})"]
            for driven, _ in GROUPS:
                stats = matrix.group_stats(doc, comp.name, driven)
                row += stats.cells() if stats else ["-"] * len(STAT_COLUMNS)
            rows.append(row)
        out.write(_md_table(header, rows))
        out.write("\n")

    summaries = matrix.reduction_summaries()
    if summaries:
        out.write("## Size reductions in comparison to JSON\n\n")
        rows = [[s.codec, *s.cells()] for s in summaries]
        out.write(_md_table(["Serialization Format", *REDUCTION_COLUMNS], rows))

    failures = matrix.roundtrip_failures
    if failures:
        out.write("\n## Round-trip failures (excluded from statistics)\n\n")
        for cell in failures:
            out.write(f"- {cell.document} / {cell.codec}: {cell.reason}\n")
    return out.getvalue().encode("utf-8")


def _json(matrix: BenchmarkMatrix) -> bytes:
    payload = {
        "matrix": matrix.to_dict(),
        "stats": [dict(zip(r[0], row)) for r in [stats_rows(matrix)] for row in r[1:]],
        "reductions": [dict(zip(r[0], row)) for r in [reduction_rows(matrix)] for row in r[1:]],
    }
    return (json.dumps(payload, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def emit_report(matrix: BenchmarkMatrix, fmt: str = "csv", table: str = "raw") -> bytes:
    """Render ``matrix``.

    Markdown and JSON carry every table at once. CSV holds a single table,
    picked with ``table`` (``raw``, ``stats`` or ``reductions``).
    """
    if fmt == "csv":
        builders = {"raw": raw_rows, "stats": stats_rows, "reductions": reduction_rows}
        if table not in builders:
            raise ValueError(f"unknown table {table!r}")
        return _csv(builders[table](matrix))
    if fmt == "markdown":
        return _markdown(matrix)
    if fmt == "json":
        return _json(matrix)
    raise ValueError(f"unknown report format {fmt!r}")
