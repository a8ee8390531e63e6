"""UBJSON (draft 12) over JsonValue.

The encoder writes plain ``[``/``]`` and ``{``/``}`` containers and picks
the smallest numeric marker that holds each value losslessly. The decoder
also accepts the optimized ``$``/``#`` container forms and high-precision
numbers so output of other encoders can be read back.
"""

import struct

from ..model import JsonParseError, parse
from ._binary import (DecodeError, EncodeError, Reader, add_member, check_float,
                      check_int, decoded_float, decoded_int, fits)


def _int(n, out):
    check_int(n)
    if 0 <= n <= 0xFF:
        out += struct.pack(">cB", b"U", n)
    elif -0x80 <= n < 0:
        out += struct.pack(">cb", b"i", n)
    elif -0x8000 <= n <= 0x7FFF:
        out += struct.pack(">ch", b"I", n)
    elif -0x80000000 <= n <= 0x7FFFFFFF:
        out += struct.pack(">ci", b"l", n)
    else:
        out += struct.pack(">cq", b"L", n)


def _string_body(s, out):
    raw = s.encode("utf-8")
    _int(len(raw), out)
    out += raw


def _encode(value, out):
    if value is None:
        out += b"Z"
    elif value is True:
        out += b"T"
    elif value is False:
        out += b"F"
    elif isinstance(value, int):
        _int(value, out)
    elif isinstance(value, float):
        check_float(value)
        if fits(value, ">f"):
            out += struct.pack(">cf", b"d", value)
        else:
            out += struct.pack(">cd", b"D", value)
    elif isinstance(value, str):
        if len(value) == 1 and ord(value) < 0x80:
            out += b"C" + value.encode("ascii")
        else:
            out += b"S"
            _string_body(value, out)
    elif isinstance(value, list):
        out += b"["
        for item in value:
            _encode(item, out)
        out += b"]"
    elif isinstance(value, dict):
        out += b"{"
        for key, item in value.items():
            _string_body(key, out)
            _encode(item, out)
        out += b"}"
    else:
        raise EncodeError(f"{type(value).__name__} is not a JSON value")


def encode(value) -> bytes:
    out = bytearray()
    try:
        _encode(value, out)
    except RecursionError:
        raise EncodeError("document nesting is too deep") from None
    return bytes(out)


_INTS = {b"i": ">b", b"U": ">B", b"I": ">h", b"l": ">i", b"L": ">q"}


def _marker(r):
    # N is a no-op marker and may appear wherever a value could start.
    while True:
        start = r.pos
        m = r.read(1)
        if m != b"N":
            return m, start


def _length(r):
    m, start = _marker(r)
    if m not in _INTS:
        raise DecodeError(f"length must be an integer, got marker {m!r}", start)
    n = r.unpack(_INTS[m])
    if n < 0:
        raise DecodeError("negative length", start)
    return n


def _high_precision(r, start):
    text = r.text(_length(r))
    try:
        value = parse(text)
    except JsonParseError:
        value = None
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DecodeError("malformed high-precision number", start)
    return value


def _value(r, m, start):
    if m == b"Z":
        return None
    if m == b"T":
        return True
    if m == b"F":
        return False
    if m in _INTS:
        return decoded_int(r.unpack(_INTS[m]), start)
    if m == b"d":
        return decoded_float(r.unpack(">f"), start)
    if m == b"D":
        return decoded_float(r.unpack(">d"), start)
    if m == b"C":
        c = r.byte()
        if c >= 0x80:
            raise DecodeError("char marker holds a non-ASCII byte", start)
        return chr(c)
    if m == b"S":
        return r.text(_length(r))
    if m == b"H":
        return _high_precision(r, start)
    if m == b"[":
        return _container(r, b"]", False)
    if m == b"{":
        return _container(r, b"}", True)
    raise DecodeError(f"unsupported marker {m!r}", start)


def _container(r, end, is_object):
    item_type = count = None
    if r.peek() == ord("$"):
        r.read(1)
        item_type = r.read(1)
        if r.peek() != ord("#"):
            raise DecodeError("typed container without a count", r.pos)
    if r.peek() == ord("#"):
        r.read(1)
        count = _length(r)

    def item():
        if item_type is not None:
            return _value(r, item_type, r.pos)
        m, start = _marker(r)
        return _value(r, m, start)

    result = {} if is_object else []
    n = 0
    while True:
        if count is None:
            m, start = _marker(r)
            if m == end:
                return result
            r.pos = start
        elif n == count:
            return result
        if is_object:
            at = r.pos
            key = r.text(_length(r))
            add_member(result, key, item(), at)
        else:
            result.append(item())
        n += 1


def decode(data: bytes):
    r = Reader(data)
    try:
        m, start = _marker(r)
        return r.finish(_value(r, m, start))
    except RecursionError:
        raise DecodeError("nesting is too deep", r.pos) from None
