"""The document x codec x compressor size matrix."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence, Tuple

from ..codecs import CodecDescriptor, roundtrip_verify
from ..compress import (CompressionError, CompressorDescriptor,
                        CompressorUnavailable, compress, decompress, identity)
from ..model import JsonValue, deep_equal, minify, parse
from .stats import GroupStats, ReductionSummary, group_stats, reduction_summary

log = logging.getLogger(__name__)

JSON_BASELINE = "JSON"
OK, FAILED, SKIPPED = "ok", "failed", "skipped"


@dataclass(frozen=True)
class CodecInfo:
    name: str
    kind: str
    schema_driven: bool
    sequential: bool


@dataclass(frozen=True)
class CompressorInfo:
    name: str
    title: str
    level: Optional[int]


@dataclass(frozen=True)
class BenchmarkCell:
    document: str
    codec: str
    compressor: str
    status: str
    size: Optional[int] = None
    roundtrip_ok: bool = True
    reason: Optional[str] = None


@dataclass(frozen=True)
class BenchmarkMatrix:
    documents: tuple     # document ids, input order
    codecs: tuple        # CodecInfo, JSON baseline first, then registry order
    compressors: tuple   # CompressorInfo, identity first
    cells: tuple         # BenchmarkCell, sorted by (document, codec, compressor) position

    def cell(self, document: str, codec: str, compressor: str) -> BenchmarkCell:
        return self._index[(document, codec, compressor)]

    @cached_property
    def _index(self) -> dict:
        return {(c.document, c.codec, c.compressor): c for c in self.cells}

    @property
    def roundtrip_failures(self) -> list:
        seen, out = set(), []
        for c in self.cells:
            if not c.roundtrip_ok and (c.document, c.codec) not in seen:
                seen.add((c.document, c.codec))
                out.append(c)
        return out

    @property
    def cell_failures(self) -> list:
        return [c for c in self.cells if c.status == FAILED and c.roundtrip_ok]

    def size(self, document: str, codec: str, compressor: str) -> Optional[int]:
        """Size of a verified cell, or None when it failed or was skipped."""
        c = self._index.get((document, codec, compressor))
        if c is None or c.status != OK:
            return None
        return c.size

    def group_stats(self, document: str, compressor: str, schema_driven: bool) -> Optional[GroupStats]:
        sizes = [self.size(document, info.name, compressor)
                 for info in self.codecs
                 if info.name != JSON_BASELINE and info.schema_driven == schema_driven]
        sizes = [s for s in sizes if s is not None]
        return group_stats(sizes) if sizes else None

    def reduction_summaries(self, compressor: Optional[str] = None) -> list:
        """Per-codec size reductions against JSON across all documents.

        With ``compressor`` set, both the codec output and JSON are taken in
        that compressed form; otherwise both are uncompressed.
        """
        column = compressor or self.compressors[0].name
        out = []
        for info in self.codecs:
            if info.name == JSON_BASELINE:
                continue
            pairs = []
            for doc in self.documents:
                j = self.size(doc, JSON_BASELINE, column)
                b = self.size(doc, info.name, column)
                if j is not None and b is not None:
                    pairs.append((j, b))
            if pairs:
                out.append(reduction_summary(info.name, info.schema_driven, pairs))
        return out

    def to_dict(self) -> dict:
        return {
            "documents": list(self.documents),
            "codecs": [asdict(c) for c in self.codecs],
            "compressors": [asdict(c) for c in self.compressors],
            "cells": [asdict(c) for c in self.cells],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "BenchmarkMatrix":
        return cls(
            documents=tuple(data["documents"]),
            codecs=tuple(CodecInfo(**c) for c in data["codecs"]),
            compressors=tuple(CompressorInfo(**c) for c in data["compressors"]),
            cells=tuple(BenchmarkCell(**c) for c in data["cells"]),
        )


def _baseline_encode(value: JsonValue):
    encoded = minify(value)
    if not deep_equal(parse(encoded), value):
        return None, "minified JSON does not re-parse to the same document"
    return encoded, None


def _compressed_size(compressor: CompressorDescriptor, payload: bytes):
    packed = compress(compressor, payload)
    if decompress(compressor, packed) != payload:
        raise CompressionError(f"{compressor.name}: decompression did not restore the input")
    return len(packed)


def _run_pair(doc_id, value, codec, compressors) -> list:
    if codec is None:
        name = JSON_BASELINE
        encoded, problem = _baseline_encode(value)
    else:
        name = codec.name
        report = roundtrip_verify(codec, value)
        encoded = report.encoded if report.ok else None
        problem = None if report.ok else report.reason
    if encoded is None:
        log.warning("%s / %s: round trip failed: %s", doc_id, name, problem)
        return [BenchmarkCell(doc_id, name, c.name, FAILED, None, False, problem)
                for c in compressors]
    cells = []
    for comp in compressors:
        if not comp.available:
            cells.append(BenchmarkCell(doc_id, name, comp.name, SKIPPED,
                                       reason=f"{comp.name} is not available"))
            continue
        try:
            size = _compressed_size(comp, encoded)
        except (CompressionError, CompressorUnavailable) as exc:
            cells.append(BenchmarkCell(doc_id, name, comp.name, FAILED, reason=str(exc)))
        else:
            cells.append(BenchmarkCell(doc_id, name, comp.name, OK, size))
    return cells


def run_matrix(documents: Iterable[Tuple[str, JsonValue]],
               codecs: Sequence[CodecDescriptor],
               compressors: Sequence[CompressorDescriptor],
               workers: int = 4) -> BenchmarkMatrix:
    """Measure every document under every codec and compressor.

    A size is only recorded after the codec output decodes back to a
    deep-equal document; a failed round trip marks every cell of that
    (document, codec) pair as failed. Unavailable compressors produce
    skipped cells. The identity compressor is always the first column.
    """
    documents = list(documents)
    ids = [doc_id for doc_id, _ in documents]
    if len(set(ids)) != len(ids):
        raise ValueError("document ids must be unique")
    names = [c.name for c in codecs]
    if len(set(names)) != len(names) or JSON_BASELINE in names:
        raise ValueError("codec names must be unique and must not shadow the JSON baseline")
    compressors = list(compressors)
    if not any(c.is_identity for c in compressors):
        compressors.insert(0, identity())
    else:
        compressors.sort(key=lambda c: not c.is_identity)

    tasks = [(doc_id, value, codec) for doc_id, value in documents
             for codec in (None, *codecs)]
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        results = list(pool.map(lambda t: _run_pair(*t, compressors), tasks))

    infos = (CodecInfo(JSON_BASELINE, "baseline", False, True),) + tuple(
        CodecInfo(c.name, c.kind, c.schema_driven, c.sequential) for c in codecs)
    return BenchmarkMatrix(
        documents=tuple(ids),
        codecs=infos,
        compressors=tuple(CompressorInfo(c.name, c.title, c.level) for c in compressors),
        cells=tuple(cell for batch in results for cell in batch),
    )
