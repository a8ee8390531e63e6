"""Load codec and compressor lineups from a JSON registry file.

A registry looks like::

    {
      "codecs": [
        "CBOR",
        {"name": "protobuf", "encode": ["pb-enc"], "decode": ["pb-dec"],
         "schema_driven": true, "sequential": true, "timeout": 10}
      ],
      "compressors": ["gzip", {"name": "zstd", "compress": ["zstd", "-19", "-c"],
                               "decompress": ["zstd", "-d", "-c"], "level": 19,
                               "label": "ZSTD"}]
    }

A bare string names a builtin codec or a default compressor. Commands may be
given as an argv list or as a single shell-style string.
"""

from __future__ import annotations

import shlex
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from . import compress as _compress
from ._proc import DEFAULT_TIMEOUT
from .codecs import BUILTIN_CODECS, CodecDescriptor, external_codec
from .model import JsonParseError, parse


class RegistryError(ValueError):
    pass


BUILTINS = {c.name.lower(): c for c in BUILTIN_CODECS}
BUILTINS.update({"msgpack": BUILTINS["messagepack"], "ubj": BUILTINS["ubjson"]})
COMPRESSOR_FACTORIES = {
    "identity": _compress.identity,
    "gzip": _compress.gzip,
    "lz4": _compress.lz4,
    "xz": _compress.xz,
    "lzma": _compress.xz,
}


@dataclass(frozen=True)
class Registry:
    codecs: tuple
    compressors: tuple


def _argv(value, where: str) -> tuple:
    if isinstance(value, str):
        argv = shlex.split(value)
    elif isinstance(value, list) and all(isinstance(v, str) for v in value):
        argv = list(value)
    else:
        raise RegistryError(f"{where}: command must be a string or a list of strings")
    if not argv:
        raise RegistryError(f"{where}: empty command")
    return tuple(argv)


def builtin_codec(name: str) -> CodecDescriptor:
    try:
        return BUILTINS[name.lower()]
    except KeyError:
        known = ", ".join(c.name for c in BUILTIN_CODECS)
        raise RegistryError(f"unknown builtin codec {name!r} (known: {known})") from None


def default_compressor(name: str, level: Optional[int] = None):
    try:
        factory = COMPRESSOR_FACTORIES[name.lower()]
    except KeyError:
        raise RegistryError(f"unknown compressor {name!r}") from None
    if factory is _compress.identity or level is None:
        return factory()
    return factory(level)


def _codec_entry(entry, timeout: float) -> CodecDescriptor:
    if isinstance(entry, str):
        return builtin_codec(entry)
    if not isinstance(entry, dict) or not isinstance(entry.get("name"), str):
        raise RegistryError("codec entries need a string 'name'")
    name = entry["name"]
    if "encode" not in entry and "decode" not in entry:
        return builtin_codec(name)
    flags = {}
    for key in ("schema_driven", "sequential"):
        if key in entry:
            if not isinstance(entry[key], bool):
                raise RegistryError(f"codec {name!r}: {key} must be true or false")
            flags[key] = entry[key]
    return external_codec(
        name,
        _argv(entry.get("encode"), f"codec {name!r} encode"),
        _argv(entry.get("decode"), f"codec {name!r} decode"),
        timeout=float(entry.get("timeout", timeout)),
        **flags,
    )


def _compressor_entry(entry, timeout: float):
    if isinstance(entry, str):
        return default_compressor(entry)
    if not isinstance(entry, dict) or not isinstance(entry.get("name"), str):
        raise RegistryError("compressor entries need a string 'name'")
    name = entry["name"]
    level = entry.get("level")
    if "compress" not in entry and "decompress" not in entry:
        return default_compressor(name, level)
    return _compress.CompressorDescriptor(
        name,
        _argv(entry.get("compress"), f"compressor {name!r} compress"),
        _argv(entry.get("decompress"), f"compressor {name!r} decompress"),
        level,
        entry.get("label", ""),
        float(entry.get("timeout", timeout)),
    )


def _unique(items, what: str):
    names = [i.name for i in items]
    dupes = sorted({n for n in names if names.count(n) > 1})
    if dupes:
        raise RegistryError(f"duplicate {what} name(s): {', '.join(dupes)}")
    return tuple(items)


def registry_from_data(data, timeout: float = DEFAULT_TIMEOUT) -> Registry:
    if not isinstance(data, dict):
        raise RegistryError("registry must be a JSON object")
    codecs = data.get("codecs")
    compressors = data.get("compressors")
    for key, entries in (("codecs", codecs), ("compressors", compressors)):
        if entries is not None and not isinstance(entries, list):
            raise RegistryError(f"registry {key!r} must be a list")
    return Registry(
        codecs=_unique([_codec_entry(e, timeout) for e in codecs], "codec")
        if codecs is not None else BUILTIN_CODECS,
        compressors=_unique([_compressor_entry(e, timeout) for e in compressors], "compressor")
        if compressors is not None else (_compress.identity(),),
    )


def load_registry(path, timeout: float = DEFAULT_TIMEOUT) -> Registry:
    try:
        data = parse(Path(path).read_bytes())
    except OSError as exc:
        raise RegistryError(f"cannot read registry {path}: {exc.strerror}") from None
    except JsonParseError as exc:
        raise RegistryError(f"registry {path} is not valid JSON: {exc}") from None
    return registry_from_data(data, timeout)


def select_codecs(names: Sequence[str], available: Sequence[CodecDescriptor]) -> tuple:
    """Pick codecs by name (case-insensitive) from ``available`` plus the builtins."""
    pool = {c.name.lower(): c for c in available}
    out = []
    for name in names:
        codec = pool.get(name.lower())
        out.append(codec if codec is not None else builtin_codec(name))
    return _unique(out, "codec")


def select_compressors(names: Sequence[str], available: Sequence) -> tuple:
    pool = {c.name.lower(): c for c in available}
    out = []
    for name in names:
        comp = pool.get(name.lower())
        out.append(comp if comp is not None else default_compressor(name))
    return _unique(out, "compressor")
