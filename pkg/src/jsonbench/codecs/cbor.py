"""CBOR (RFC 7049) over JsonValue.

Encoding is definite-length with preferred serialization: every argument
uses the shortest head, and floats use the narrowest of half, single or
double precision that holds the value exactly. Indefinite-length items,
tags, byte strings and simple values other than false/true/null are
rejected on decode.
"""

import struct

from ._binary import (DecodeError, EncodeError, Reader, add_member, check_float,
                      check_int, decoded_float, decoded_int, fits)

UNSIGNED, NEGATIVE, BYTES, TEXT, ARRAY, MAP, TAG, SIMPLE = range(8)


def _head(major, arg, out):
    if arg < 24:
        out.append(major << 5 | arg)
    elif arg <= 0xFF:
        out += struct.pack(">BB", major << 5 | 24, arg)
    elif arg <= 0xFFFF:
        out += struct.pack(">BH", major << 5 | 25, arg)
    elif arg <= 0xFFFFFFFF:
        out += struct.pack(">BI", major << 5 | 26, arg)
    else:
        out += struct.pack(">BQ", major << 5 | 27, arg)


def _encode(value, out):
    if value is None:
        out.append(0xF6)
    elif value is False:
        out.append(0xF4)
    elif value is True:
        out.append(0xF5)
    elif isinstance(value, int):
        check_int(value)
        if value >= 0:
            _head(UNSIGNED, value, out)
        else:
            _head(NEGATIVE, -1 - value, out)
    elif isinstance(value, float):
        check_float(value)
        if fits(value, ">e"):
            out += struct.pack(">Be", 0xF9, value)
        elif fits(value, ">f"):
            out += struct.pack(">Bf", 0xFA, value)
        else:
            out += struct.pack(">Bd", 0xFB, value)
    elif isinstance(value, str):
        raw = value.encode("utf-8")
        _head(TEXT, len(raw), out)
        out += raw
    elif isinstance(value, list):
        _head(ARRAY, len(value), out)
        for item in value:
            _encode(item, out)
    elif isinstance(value, dict):
        _head(MAP, len(value), out)
        for key, item in value.items():
            _encode(key, out)
            _encode(item, out)
    else:
        raise EncodeError(f"{type(value).__name__} is not a JSON value")


def encode(value) -> bytes:
    out = bytearray()
    try:
        _encode(value, out)
    except RecursionError:
        raise EncodeError("document nesting is too deep") from None
    return bytes(out)


_ARG = {24: ">B", 25: ">H", 26: ">I", 27: ">Q"}


def _argument(r, info, start):
    if info < 24:
        return info
    if info in _ARG:
        return r.unpack(_ARG[info])
    if info == 31:
        raise DecodeError("indefinite-length item not supported", start)
    raise DecodeError(f"reserved additional information {info}", start)


def _decode(r):
    start = r.pos
    initial = r.byte()
    major, info = initial >> 5, initial & 0x1F
    if major == SIMPLE:
        if info == 20:
            return False
        if info == 21:
            return True
        if info == 22:
            return None
        if info == 25:
            return decoded_float(r.unpack(">e"), start)
        if info == 26:
            return decoded_float(r.unpack(">f"), start)
        if info == 27:
            return decoded_float(r.unpack(">d"), start)
        if info == 31:
            raise DecodeError("unexpected break code", start)
        raise DecodeError(f"unsupported simple value {info}", start)
    arg = _argument(r, info, start)
    if major == UNSIGNED:
        return decoded_int(arg, start)
    if major == NEGATIVE:
        return decoded_int(-1 - arg, start)
    if major == TEXT:
        return r.text(arg)
    if major == ARRAY:
        return [_decode(r) for _ in range(arg)]
    if major == MAP:
        obj = {}
        for _ in range(arg):
            at = r.pos
            key = _decode(r)
            if not isinstance(key, str):
                raise DecodeError("map key is not a text string", at)
            add_member(obj, key, _decode(r), at)
        return obj
    raise DecodeError(f"unsupported major type {major}", start)


def decode(data: bytes):
    r = Reader(data)
    try:
        return r.finish(_decode(r))
    except RecursionError:
        raise DecodeError("nesting is too deep", r.pos) from None
