"""Serialization formats and lossless round-trip verification.

Three schema-less formats are built in. Anything else, schema-driven
formats included, plugs in as an external codec: a pair of commands that
speak the stdin/stdout protocol

* encode: minified UTF-8 JSON on stdin -> raw bytes on stdout, exit 0
* decode: raw bytes on stdin -> UTF-8 JSON on stdout, exit 0

with one document per invocation and no framing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .. import _proc
from ..model import (JsonParseError, JsonValue, deep_equal, format_pointer,
                     minify, parse)
from . import cbor, msgpack, ubjson
from ._binary import DecodeError, EncodeError

BUILTIN = "builtin"
EXTERNAL = "external"


class CodecError(RuntimeError):
    """A codec could not encode or decode a document."""


@dataclass(frozen=True)
class CodecDescriptor:
    name: str
    kind: str = BUILTIN
    schema_driven: bool = False
    sequential: bool = True
    encoder: Optional[Callable] = field(default=None, repr=False, compare=False)
    decoder: Optional[Callable] = field(default=None, repr=False, compare=False)
    encode_cmd: tuple = ()
    decode_cmd: tuple = ()
    timeout: float = _proc.DEFAULT_TIMEOUT

    def __post_init__(self):
        if self.kind == BUILTIN:
            if self.schema_driven:
                raise ValueError("builtin codecs are schema-less")
            if self.encoder is None or self.decoder is None:
                raise ValueError(f"builtin codec {self.name!r} needs encoder and decoder")
        elif self.kind == EXTERNAL:
            if not self.encode_cmd or not self.decode_cmd:
                raise ValueError(f"external codec {self.name!r} needs both commands")
        else:
            raise ValueError(f"unknown codec kind {self.kind!r}")

    def encode(self, value: JsonValue) -> bytes:
        if self.kind == BUILTIN:
            try:
                return self.encoder(value)
            except EncodeError as exc:
                raise CodecError(f"{self.name}: {exc}") from None
        try:
            return _proc.pipe(self.encode_cmd, minify(value), self.timeout)
        except _proc.ProcessError as exc:
            raise CodecError(f"{self.name} encode: {exc}") from None

    def decode(self, data: bytes) -> JsonValue:
        if self.kind == BUILTIN:
            try:
                return self.decoder(data)
            except DecodeError as exc:
                raise CodecError(f"{self.name}: {exc}") from None
        try:
            out = _proc.pipe(self.decode_cmd, data, self.timeout)
        except _proc.ProcessError as exc:
            raise CodecError(f"{self.name} decode: {exc}") from None
        try:
            return parse(out)
        except JsonParseError as exc:
            raise CodecError(f"{self.name} decode: protocol violation, "
                             f"output is not JSON ({exc})") from None


MESSAGEPACK = CodecDescriptor("MessagePack", encoder=msgpack.encode, decoder=msgpack.decode)
CBOR = CodecDescriptor("CBOR", encoder=cbor.encode, decoder=cbor.decode)
UBJSON = CodecDescriptor("UBJSON", encoder=ubjson.encode, decoder=ubjson.decode)

BUILTIN_CODECS = (CBOR, MESSAGEPACK, UBJSON)


def external_codec(name: str, encode_cmd: Sequence[str], decode_cmd: Sequence[str], *,
                   schema_driven: bool = False, sequential: bool = True,
                   timeout: float = _proc.DEFAULT_TIMEOUT) -> CodecDescriptor:
    return CodecDescriptor(
        name=name,
        kind=EXTERNAL,
        schema_driven=schema_driven,
        sequential=sequential,
        encode_cmd=tuple(encode_cmd),
        decode_cmd=tuple(decode_cmd),
        timeout=timeout,
    )


@dataclass(frozen=True)
class RoundTripReport:
    codec: str
    ok: bool
    pointer: Optional[str] = None
    expected: Optional[str] = None
    actual: Optional[str] = None
    reason: Optional[str] = None
    encoded: Optional[bytes] = field(default=None, repr=False, compare=False)


_MISSING = "<missing>"


def _fragment(value) -> str:
    return minify(value).decode("utf-8")


def first_difference(expected: JsonValue, actual: JsonValue, path: tuple = ()):
    """Locate the first divergence as (pointer, expected, actual) fragments.

    Returns None when the two values are deep-equal.
    """
    if isinstance(expected, dict) and isinstance(actual, dict):
        for key, item in expected.items():
            if key not in actual:
                return format_pointer(path + (key,)), _fragment(item), _MISSING
            found = first_difference(item, actual[key], path + (key,))
            if found:
                return found
        for key, item in actual.items():
            if key not in expected:
                return format_pointer(path + (key,)), _MISSING, _fragment(item)
        return None
    if isinstance(expected, list) and isinstance(actual, list):
        for i, (a, b) in enumerate(zip(expected, actual)):
            found = first_difference(a, b, path + (i,))
            if found:
                return found
        if len(expected) > len(actual):
            i = len(actual)
            return format_pointer(path + (i,)), _fragment(expected[i]), _MISSING
        if len(actual) > len(expected):
            i = len(expected)
            return format_pointer(path + (i,)), _MISSING, _fragment(actual[i])
        return None
    if deep_equal(expected, actual):
        return None
    return format_pointer(path), _fragment(expected), _fragment(actual)


def roundtrip_verify(codec: CodecDescriptor, value: JsonValue) -> RoundTripReport:
    """Encode, decode and compare against the original document."""
    try:
        encoded = codec.encode(value)
        decoded = codec.decode(encoded)
    except CodecError as exc:
        return RoundTripReport(codec.name, False, reason=str(exc))
    diff = first_difference(value, decoded)
    if diff is None:
        return RoundTripReport(codec.name, True, encoded=encoded)
    pointer, expected, actual = diff
    return RoundTripReport(codec.name, False, pointer, expected, actual,
                           reason=f"decoded document differs at {pointer}",
                           encoded=encoded)


__all__ = [
    "BUILTIN_CODECS", "CBOR", "MESSAGEPACK", "UBJSON", "CodecDescriptor",
    "CodecError", "DecodeError", "EncodeError", "RoundTripReport",
    "external_codec", "first_difference", "roundtrip_verify",
]
