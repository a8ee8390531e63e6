"""Lossless compressors driven through their command-line tools.

Tools run in stream mode (stdin to stdout) so no file name or file
metadata ends up in the compressed output. Set ``JSONBENCH_GZIP``,
``JSONBENCH_LZ4`` or ``JSONBENCH_XZ`` to point at a specific executable.
"""

from __future__ import annotations

import os
import shutil
from dataclasses import dataclass
from typing import Optional

from . import _proc

IDENTITY = "identity"


class CompressorUnavailable(RuntimeError):
    pass


class CompressionError(RuntimeError):
    pass


@dataclass(frozen=True)
class CompressorDescriptor:
    name: str
    compress_cmd: tuple = ()
    decompress_cmd: tuple = ()
    level: Optional[int] = None
    label: str = ""
    timeout: float = _proc.DEFAULT_TIMEOUT

    def __post_init__(self):
        if self.name != IDENTITY and not (self.compress_cmd and self.decompress_cmd):
            raise ValueError(f"compressor {self.name!r} needs both commands")

    @property
    def title(self) -> str:
        return self.label or self.name

    @property
    def is_identity(self) -> bool:
        return self.name == IDENTITY

    @property
    def available(self) -> bool:
        if self.is_identity:
            return True
        return (shutil.which(self.compress_cmd[0]) is not None
                and shutil.which(self.decompress_cmd[0]) is not None)


def _tool(name: str) -> str:
    return os.environ.get(f"JSONBENCH_{name.upper()}", name)


def identity() -> CompressorDescriptor:
    return CompressorDescriptor(IDENTITY, label="Uncompressed")


def gzip(level: int = 9) -> CompressorDescriptor:
    exe = _tool("gzip")
    return CompressorDescriptor("gzip", (exe, f"-{level}", "-c"), (exe, "-d", "-c"),
                                level, "GZIP")


def lz4(level: int = 9) -> CompressorDescriptor:
    exe = _tool("lz4")
    return CompressorDescriptor("lz4", (exe, f"-{level}", "-c"), (exe, "-d", "-c"),
                                level, "LZ4")


def xz(level: int = 9) -> CompressorDescriptor:
    exe = _tool("xz")
    return CompressorDescriptor("xz", (exe, f"-{level}", "-c"), (exe, "-d", "-c"),
                                level, "LZMA")


def default_compressors() -> tuple:
    """identity followed by gzip, lz4 and xz at level 9."""
    return (identity(), gzip(), lz4(), xz())


def compress(compressor: CompressorDescriptor, data: bytes) -> bytes:
    if compressor.is_identity:
        return data
    if not compressor.available:
        raise CompressorUnavailable(f"{compressor.compress_cmd[0]!r} is not installed")
    try:
        return _proc.pipe(compressor.compress_cmd, data, compressor.timeout)
    except _proc.ProcessError as exc:
        raise CompressionError(f"{compressor.name}: {exc}") from None


def decompress(compressor: CompressorDescriptor, data: bytes) -> bytes:
    if compressor.is_identity:
        return data
    if not compressor.available:
        raise CompressorUnavailable(f"{compressor.decompress_cmd[0]!r} is not installed")
    try:
        return _proc.pipe(compressor.decompress_cmd, data, compressor.timeout)
    except _proc.ProcessError as exc:
        raise CompressionError(f"{compressor.name}: corrupt stream ({exc})") from None
