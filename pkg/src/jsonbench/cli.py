"""jsonbench command-line interface.

Exit codes: 0 success, 1 some inputs could not be processed, 2 input parse
failure (or nothing usable was given), 3 a codec failed round-trip
verification.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import sys
from collections import Counter
from pathlib import Path
from typing import Optional, Sequence

from . import __version__, _proc
from .bench import emit_report, run_matrix
from .bench.report import FORMATS, TABLES
from .codecs import BUILTIN_CODECS, EXTERNAL
from .compress import identity
from .model import JsonParseError, enumerate_nodes, parse
from .registry import (RegistryError, load_registry, select_codecs,
                       select_compressors)
from .taxonomy import TAXONOMY_ACRONYMS, corpus_histograms, render_text, report_from_nodes

log = logging.getLogger("jsonbench")

EXIT_OK, EXIT_PARTIAL, EXIT_PARSE, EXIT_ROUNDTRIP = 0, 1, 2, 3
STDIN = "-"
CORPUS_FILES = {
    "byte_size": "size.csv",
    "redundancy": "redundancy.csv",
    "nesting_weight": "nesting.csv",
    "category": "categories.csv",
}


@dataclasses.dataclass(frozen=True)
class CliConfig:
    command: str
    inputs: tuple = ()
    registry: Optional[str] = None
    codecs: Optional[tuple] = None
    compressors: Optional[tuple] = None
    format: str = "text"
    table: str = "raw"
    workers: int = 4
    timeout: Optional[float] = None
    output: Optional[str] = None
    show_nodes: bool = False


class InputError(Exception):
    """A single input could not be read (exit 1) or parsed (exit 2)."""

    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _read(path: str) -> bytes:
    if path == STDIN:
        return sys.stdin.buffer.read()
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"{path}: cannot read: {exc.strerror or exc}", EXIT_PARTIAL) from None


def load_document(path: str):
    data = _read(path)
    try:
        return parse(data)
    except JsonParseError as exc:
        raise InputError(f"{path}: {exc}", EXIT_PARSE) from None


def _display_name(path: str) -> str:
    return "<stdin>" if path == STDIN else path


def _load_many(paths: Sequence[str], err):
    """Parse every path, reporting failures on ``err`` without stopping."""
    loaded, codes = [], []
    for path in paths:
        try:
            loaded.append((path, load_document(path)))
        except InputError as exc:
            print(f"error: {exc}", file=err)
            codes.append(exc.code)
    return loaded, codes


def _batch_status(loaded, codes) -> int:
    if not codes:
        return EXIT_OK
    if not loaded:
        return max(codes)
    return EXIT_PARTIAL


# -- commands ----------------------------------------------------------------------

def cmd_analyze(cfg: CliConfig, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    (path,) = cfg.inputs
    try:
        value = load_document(path)
    except InputError as exc:
        print(f"error: {exc}", file=err)
        return exc.code
    nodes = enumerate_nodes(value)
    report = report_from_nodes(nodes)
    if cfg.format == "json":
        payload = report.to_dict()
        if cfg.show_nodes:
            payload["nodes"] = [
                {"pointer": n.pointer, "type": n.kind, "level": n.level,
                 "byte_size": n.byte_size, "same_as": n.duplicate_of}
                for n in nodes]
        out.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    else:
        out.write(render_text(report, nodes if cfg.show_nodes else None))
    return EXIT_OK


def cmd_classify(cfg: CliConfig, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    loaded, codes = _load_many(cfg.inputs, err)
    tally = Counter()
    for path, value in loaded:
        report = report_from_nodes(enumerate_nodes(value))
        tally.update(report.acronyms)
        out.write(f"{_display_name(path)}: {', '.join(report.acronyms)}\n")
    if loaded:
        out.write("\nCategory distribution\n")
        for acronym in TAXONOMY_ACRONYMS:
            if tally[acronym]:
                out.write(f"  {acronym}  {tally[acronym]}\n")
    return _batch_status(loaded, codes)


def _corpus_paths(inputs: Sequence[str]) -> list:
    paths = []
    for item in inputs:
        p = Path(item)
        if item != STDIN and p.is_dir():
            paths.extend(str(f) for f in sorted(p.rglob("*.json")) if f.is_file())
        else:
            paths.append(item)
    return paths


def cmd_corpus(cfg: CliConfig, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    paths = _corpus_paths(cfg.inputs)
    if not paths:
        print("error: corpus is empty (no .json files found)", file=err)
        return EXIT_PARSE
    loaded, codes = _load_many(paths, err)
    if not loaded:
        print("error: no document in the corpus could be analyzed", file=err)
        return max(codes)
    reports = [report_from_nodes(enumerate_nodes(v)) for _, v in loaded]
    histograms = corpus_histograms(reports)
    target = Path(cfg.output or ".")
    target.mkdir(parents=True, exist_ok=True)
    for metric, filename in CORPUS_FILES.items():
        (target / filename).write_text(histograms[metric].to_csv(), encoding="utf-8")
        out.write(f"wrote {target / filename}\n")
    out.write(f"{len(reports)} documents analyzed\n")
    return _batch_status(loaded, codes)


def _lineup(cfg: CliConfig):
    if cfg.registry:
        registry = load_registry(cfg.registry)
        codecs, compressors = registry.codecs, registry.compressors
    else:
        codecs, compressors = BUILTIN_CODECS, (identity(),)
    if cfg.codecs is not None:
        codecs = select_codecs(cfg.codecs, codecs)
    if cfg.compressors is not None:
        compressors = select_compressors(cfg.compressors, compressors)
    if cfg.timeout is not None:
        codecs = tuple(dataclasses.replace(c, timeout=cfg.timeout) if c.kind == EXTERNAL else c
                       for c in codecs)
        compressors = tuple(dataclasses.replace(c, timeout=cfg.timeout) for c in compressors)
    return codecs, compressors


def cmd_bench(cfg: CliConfig, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    try:
        codecs, compressors = _lineup(cfg)
    except (RegistryError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_PARSE
    if len(set(cfg.inputs)) != len(cfg.inputs):
        print("error: the same input was given more than once", file=err)
        return EXIT_PARSE
    loaded, codes = _load_many(cfg.inputs, err)
    if not loaded:
        return max(codes, default=EXIT_PARSE)
    for comp in compressors:
        if not comp.available:
            print(f"warning: {comp.name} is not installed; its cells are skipped", file=err)

    matrix = run_matrix([(_display_name(p), v) for p, v in loaded], codecs, compressors,
                        workers=cfg.workers)
    body = emit_report(matrix, cfg.format, cfg.table)
    if cfg.output:
        Path(cfg.output).write_bytes(body)
    else:
        out.flush()
        buffer = getattr(out, "buffer", None)
        if buffer is not None:
            buffer.write(body)
            buffer.flush()
        else:
            out.write(body.decode("utf-8"))

    for cell in matrix.roundtrip_failures:
        print(f"error: {cell.document} / {cell.codec}: {cell.reason}", file=err)
    for cell in matrix.cell_failures:
        print(f"error: {cell.document} / {cell.codec} / {cell.compressor}: {cell.reason}",
              file=err)
    if matrix.roundtrip_failures:
        return EXIT_ROUNDTRIP
    if matrix.cell_failures:
        return EXIT_PARTIAL
    return _batch_status(loaded, codes)


COMMANDS = {
    "analyze": cmd_analyze,
    "classify": cmd_classify,
    "corpus": cmd_corpus,
    "bench": cmd_bench,
}


# -- argument parsing --------------------------------------------------------------

def _names(text: str) -> tuple:
    return tuple(n.strip() for n in text.split(",") if n.strip())


def _positive_int(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def _positive_float(text: str) -> float:
    x = float(text)
    if not x > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return x


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jsonbench",
        description="Classify JSON documents and measure how compactly binary formats store them.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("analyze", help="full taxonomy report for one document")
    p.add_argument("input", help="JSON file, or - for stdin")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--nodes", action="store_true", help="include the per-value node table")

    p = sub.add_parser("classify", help="one taxonomy line per document")
    p.add_argument("inputs", nargs="+", metavar="input")

    p = sub.add_parser("corpus", help="histogram CSVs for a directory of documents")
    p.add_argument("inputs", nargs="+", metavar="dir",
                   help="directories (searched for *.json) or files")
    p.add_argument("--output-dir", default=".", help="where the CSV files go (default: .)")

    p = sub.add_parser("bench", help="size benchmark across codecs and compressors")
    p.add_argument("inputs", nargs="+", metavar="input")
    p.add_argument("--registry", help="JSON file declaring codecs and compressors")
    p.add_argument("--codecs", type=_names,
                   help="comma-separated codec names (default: the registry or all builtins)")
    p.add_argument("--compressors", type=_names,
                   help="comma-separated compressors, e.g. identity,gzip,lz4,xz "
                        "(default: the registry or identity only)")
    p.add_argument("--format", choices=FORMATS, default="markdown")
    p.add_argument("--table", choices=TABLES, default="raw",
                   help="which table a CSV report holds (default: raw)")
    p.add_argument("--workers", type=_positive_int, default=4)
    p.add_argument("--timeout", type=_positive_float,
                   help="seconds allowed per external process (default: 30)")
    p.add_argument("-o", "--output", help="write the report here instead of stdout")
    return parser


def config_from_args(args: argparse.Namespace) -> CliConfig:
    command = args.command
    inputs = (args.input,) if command == "analyze" else tuple(args.inputs)
    return CliConfig(
        command=command,
        inputs=inputs,
        registry=getattr(args, "registry", None),
        codecs=getattr(args, "codecs", None),
        compressors=getattr(args, "compressors", None),
        format=getattr(args, "format", "text"),
        table=getattr(args, "table", "raw"),
        workers=getattr(args, "workers", 4),
        timeout=getattr(args, "timeout", None),
        output=getattr(args, "output", None) or getattr(args, "output_dir", None),
        show_nodes=getattr(args, "nodes", False),
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR,
                        format="%(levelname)s %(name)s: %(message)s")
    cfg = config_from_args(args)
    _proc.set_process_cap(max(cfg.workers, 1))
    return COMMANDS[cfg.command](cfg)


if __name__ == "__main__":
    sys.exit(main())
